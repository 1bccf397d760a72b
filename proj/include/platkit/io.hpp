#pragma once

#include <string>
#include <string_view>

#include "json.hpp"
#include "platkit/banded.hpp"
#include "platkit/braided_surface.hpp"
#include "platkit/motion_picture.hpp"

namespace platkit::io {

using nlohmann::json;

// Braid-system file:
//   {"degree": 4,
//    "entries": ["1 2 -1", {"conjugator": "-2 -2 -2", "index": 1, "sign": 1}]}
BraidSystem braid_system_from_json(const json& j);
json to_json(const BraidSystem& s);

// Banded-braid file: {"strands": 4, "base": "", "bands": [{"slot": 2, "sign": 1, "time": 0.5}]}
// "time" may be a number or a "p/q" string.
BandedBraid banded_from_json(const json& j);
json to_json(const BandedBraid& bb);

// Certificates: {"lambda": "0,0", "lambda1": "0,0", "lambda2": "1",
//                "gamma": "", "gamma_prime": "", "delta": "", "delta_prime": ""}
// Hilden expressions are token strings in K_2|lambda|.
Certificates certificates_from_json(const json& j);
json to_json(const Certificates& c);

json to_json(const BraidedSurfacePlan& plan);
json to_json(const HurwitzResult& r);

MotionPictureDocument motion_picture_from_json(const json& j);
json to_json(const MotionPictureDocument& doc);

/// ';'-separated braid words; words of the shape u g u^-1 become monodromy entries.
BraidSystem braid_system_from_inline(std::string_view entries, int degree);

json parse_json_text(std::string_view text);
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace platkit::io
