#include "orbibraid/rep_file.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "orbibraid/error.hpp"

namespace orbibraid {

  RepData parse_rep(std::string const& text) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (nlohmann::json::parse_error const& e) {
      throw ParseError(std::string("rep file: ") + e.what(), 1, e.byte);
    }
    if (!j.is_object()) {
      throw ParseError("rep file must hold a JSON object", 1, 1);
    }
    static std::set<std::string> const known{"name", "d", "m", "R", "Rphi", "Rphiphi",
                                             "K", "T", "theta"};
    for (auto const& [key, _] : j.items()) {
      if (!known.count(key)) {
        throw ParseError("rep file: unknown key '" + key + "'", 1, 1);
      }
    }
    for (char const* key : {"d", "m", "R", "K"}) {
      if (!j.contains(key)) {
        throw ParseError(std::string("rep file: missing '") + key + "'", 1, 1);
      }
    }
    auto dim = [&j](char const* key) {
      if (!j[key].is_number_unsigned() || j[key].get<std::size_t>() == 0) {
        throw ParseError(std::string("rep file: '") + key + "' must be a positive integer",
                         1, 1);
      }
      return j[key].get<std::size_t>();
    };
    auto mat = [&j](char const* key) -> std::optional<QMatrix> {
      if (!j.contains(key)) {
        return std::nullopt;
      }
      return QMatrix::from_json(j[key]);
    };
    RepData r = RepData::make(dim("d"), dim("m"), *mat("R"), *mat("K"), mat("T"),
                              mat("Rphi"), mat("Rphiphi"));
    r.theta = mat("theta");
    return r;
  }

  RepData load_rep(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw Error("cannot open " + path);
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_rep(ss.str());
  }

  nlohmann::json to_json(RepData const& data) {
    nlohmann::json j;
    j["d"]       = data.d;
    j["m"]       = data.m;
    j["R"]       = data.R.to_json();
    j["Rphi"]    = data.Rphi.to_json();
    j["Rphiphi"] = data.Rphiphi.to_json();
    j["K"]       = data.K.to_json();
    j["T"]       = data.T.to_json();
    if (data.theta) {
      j["theta"] = data.theta->to_json();
    }
    return j;
  }

}  // namespace orbibraid
