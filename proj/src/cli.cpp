#include "orbibraid/cli.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "orbibraid/coherence.hpp"
#include "orbibraid/dsl.hpp"
#include "orbibraid/error.hpp"
#include "orbibraid/garside.hpp"
#include "orbibraid/operad.hpp"
#include "orbibraid/reflection.hpp"
#include "orbibraid/rep_file.hpp"

namespace orbibraid::cli {

  namespace {
    using nlohmann::json;

    struct Report {
      std::string status = "ok";  // ok | fail | error
      json        payload = json::object();
    };

    int exit_code(Report const& r) {
      return r.status == "ok" ? Exit::ok : r.status == "fail" ? Exit::fail : Exit::error;
    }

    bool is_matrix(json const& v) {
      return v.is_array() && !v.empty() && v[0].is_array() && !v[0].empty()
             && v[0][0].is_string();
    }

    std::string render_matrix(json const& v) {
      std::vector<std::size_t> width(v[0].size(), 0);
      for (auto const& row : v) {
        for (std::size_t j = 0; j < row.size(); ++j) {
          width[j] = std::max(width[j], row[j].get<std::string>().size());
        }
      }
      std::ostringstream os;
      for (auto const& row : v) {
        os << "  [";
        for (std::size_t j = 0; j < row.size(); ++j) {
          os << "  " << std::setw(static_cast<int>(width[j])) << row[j].get<std::string>();
        }
        os << " ]\n";
      }
      return os.str();
    }

    void render_text(std::ostream& out, std::string const& command, Report const& r,
                     std::optional<double> ms) {
      std::vector<std::pair<std::string, json>> rows{{"command", command},
                                                     {"status", r.status}};
      for (auto const& [k, v] : r.payload.items()) {
        rows.emplace_back(k, v);
      }
      if (ms) {
        rows.emplace_back("elapsed_ms", *ms);
      }
      std::size_t w = 0;
      for (auto const& row : rows) {
        w = std::max(w, row.first.size());
      }
      for (auto const& [k, v] : rows) {
        out << std::left << std::setw(static_cast<int>(w + 1)) << (k + ":");
        if (is_matrix(v)) {
          out << "\n" << render_matrix(v);
        } else if (v.is_string()) {
          out << " " << v.get<std::string>() << "\n";
        } else {
          out << " " << v.dump() << "\n";
        }
      }
    }

    std::string join(std::vector<std::string> const& args) {
      std::string s;
      for (auto const& a : args) {
        if (!s.empty()) {
          s += ' ';
        }
        bool quote = a.empty() || a.find(' ') != std::string::npos;
        s += quote ? "\"" + a + "\"" : a;
      }
      return s;
    }

    std::vector<Color> parse_colors(std::string const& s) {
      std::vector<Color> out;
      std::string        item;
      std::istringstream is(s);
      while (std::getline(is, item, ',')) {
        if (!item.empty()) {
          out.push_back(parse_color(item));
        }
      }
      return out;
    }

    json signature_json(Verdict const& v) {
      return {{"lhs_domain", v.lhs_domain.to_string()},
              {"lhs_codomain", v.lhs_codomain.to_string()},
              {"rhs_domain", v.rhs_domain.to_string()},
              {"rhs_codomain", v.rhs_codomain.to_string()}};
    }
  }  // namespace

  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"orbibraid: braids, signed operations, coherence and K-matrices"};
    app.require_subcommand(1);
    bool as_json = false, timing = false;
    app.add_flag("--json", as_json, "machine-readable output");
    app.add_flag("--timing", timing, "report elapsed time");

    std::function<Report()> action;

    // braid
    auto* braid = app.add_subcommand("braid", "normal forms and equality of braid words");
    braid->require_subcommand(1);
    int                      strands = 0;
    bool                     cyl     = false;
    std::vector<std::string> words;
    auto*                    nf = braid->add_subcommand("nf", "Garside normal form");
    auto*                    eq = braid->add_subcommand("eq", "decide equality of two words");
    for (auto* sc : {nf, eq}) {
      sc->add_option("-n,--strands", strands, "strand count")->required();
      sc->add_flag("--cyl", cyl, "cylinder braid words (letters k, K)");
    }
    nf->add_option("word", words, "word such as \"s1 S2 s1\"")->required()->expected(1);
    eq->add_option("words", words, "two words")->required()->expected(2);
    nf->callback([&] {
      action = [&] {
        Report    r;
        GarsideNF g = cyl ? cyl_garside_nf(CylBraidWord::parse(words[0], strands))
                          : garside_nf(BraidWord::parse(words[0], strands));
        r.payload["strands"]  = strands;
        r.payload["cylinder"] = cyl;
        r.payload["nf"]       = g.to_string();
        r.payload["trivial"]  = g.is_trivial();
        return r;
      };
    });
    eq->callback([&] {
      action = [&] {
        Report r;
        bool   e = cyl ? cyl_braid_eq(CylBraidWord::parse(words[0], strands),
                                      CylBraidWord::parse(words[1], strands))
                       : braid_eq(BraidWord::parse(words[0], strands),
                                  BraidWord::parse(words[1], strands));
        r.payload["equal"] = e;
        r.status           = e ? "ok" : "fail";
        return r;
      };
    });

    // operad
    auto* operad = app.add_subcommand("operad", "signed operations of the disk operads");
    operad->require_subcommand(1);
    std::string out_color = "D", in_colors;
    std::size_t arity     = 0;
    auto*       cls       = operad->add_subcommand("classify", "list components");
    cls->add_option("-k,--arity", arity, "number of inputs")->required();
    cls->add_option("--out", out_color, "output color D or Dstar");
    cls->add_option("--inputs", in_colors, "comma separated input colors (default all D)");
    cls->callback([&] {
      action = [&] {
        Report             r;
        std::vector<Color> cs = parse_colors(in_colors);
        if (in_colors.empty()) {
          cs.assign(arity, Color::D);
        }
        auto ops            = classify(arity, parse_color(out_color), cs);
        json list           = json::array();
        for (auto const& op : ops) {
          list.push_back(op.to_string());
        }
        r.payload["count"] = ops.size();
        r.payload["operations"] = list;
        return r;
      };
    });
    std::string              outer, outer_perm;
    std::vector<std::string> inner;
    auto*                    cmp = operad->add_subcommand("compose", "compose signed operations");
    cmp->add_option("outer", outer, "e.g. \"op D [D,D] eps=01 perm=21\"")->required();
    cmp->add_option("inner", inner, "one operation per input of outer")->required();
    cmp->add_option("--perm", outer_perm, "input i of outer is fed by inner[perm(i)]");
    cmp->callback([&] {
      action = [&] {
        Report                r;
        std::vector<SignedOp> fs;
        for (auto const& s : inner) {
          fs.push_back(SignedOp::parse(s));
        }
        SignedOp g = SignedOp::parse(outer);
        SignedOp c = outer_perm.empty() ? compose(g, fs)
                                        : compose(g, fs, Permutation::parse(outer_perm));
        r.payload["result"] = c.to_string();
        return r;
      };
    });

    // coherence
    auto* coh = app.add_subcommand("coherence", "decide commutativity of diagrams");
    coh->require_subcommand(1);
    std::string file, flavor;
    auto*       chk = coh->add_subcommand("check", "check a diagram file");
    chk->add_option("file", file, "diagram file")->required();
    chk->add_option("--flavor", flavor, "override: monoidal, braided or symmetric");
    chk->callback([&] {
      action = [&] {
        Report  r;
        Diagram d = load_diagram(file);
        if (!flavor.empty()) {
          d.flavor = parse_flavor(flavor);
        }
        Verdict v = check(d);
        r.payload = v.to_json();
        r.payload["verdict"] = r.payload["status"];
        r.payload.erase("status");
        if (!d.name.empty()) {
          r.payload["name"] = d.name;
        }
        if (v.status != Status::not_parallel) {
          r.payload.erase("signatures");
        } else {
          r.payload["signatures"] = signature_json(v);
        }
        r.status = v.status == Status::commutes ? "ok" : "fail";
        return r;
      };
    });

    // rep
    auto* rep = app.add_subcommand("rep", "matrix data for R and K");
    rep->require_subcommand(1);
    std::string rep_file, word, mor, at;
    int         rep_strands = 3;
    auto*       ver         = rep->add_subcommand("verify", "Yang-Baxter, reflection, relations");
    ver->add_option("file", rep_file, "rep file")->required();
    ver->add_option("-n,--strands", rep_strands, "strand count for the relations (default 3)");
    ver->callback([&] {
      action = [&] {
        Report  r;
        RepData data = load_rep(rep_file);
        data.validate();
        bool ybe = yang_baxter_check(data.R);
        bool re  = reflection_check(data);
        r.payload["yang_baxter"] = ybe;
        r.payload["reflection"]  = re;
        try {
          build_cyl_rep(data, rep_strands);
          r.payload["relations"] = "all hold on " + std::to_string(rep_strands) + " strands";
        } catch (RelationError const& e) {
          r.payload["relations"] = e.what();
          r.status               = "fail";
        }
        if (!ybe || !re) {
          r.status = "fail";
        }
        return r;
      };
    });
    auto* evl = rep->add_subcommand("eval", "evaluate a braid word or a morphism");
    evl->add_option("file", rep_file, "rep file")->required();
    evl->add_option("word", word, "cylinder braid word");
    evl->add_option("-n,--strands", rep_strands, "strand count of the word");
    evl->add_option("--mor", mor, "DSL morphism instead of a word");
    evl->add_option("--at", at, "also specialize at this rational value of q");
    evl->callback([&] {
      action = [&] {
        Report  r;
        RepData data = load_rep(rep_file);
        QMatrix m;
        if (!mor.empty()) {
          m = eval_mor(data, parse_mor(mor));
        } else {
          CylRep rp = build_cyl_rep(data, rep_strands);
          m         = eval_braid(rp, CylBraidWord::parse(word, rep_strands));
        }
        r.payload["rows"]   = m.rows();
        r.payload["matrix"] = m.to_json();
        if (!at.empty()) {
          Rational q0(at);
          json     vals = json::array();
          for (auto const& row : specialize(m, q0)) {
            json jr = json::array();
            for (auto const& x : row) {
              jr.push_back(x.str());
            }
            vals.push_back(jr);
          }
          r.payload["specialized"] = vals;
        }
        return r;
      };
    });

    std::vector<char const*> argv{"orbibraid"};
    for (auto const& a : args) {
      argv.push_back(a.c_str());
    }
    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return Exit::ok;
    } catch (CLI::ParseError const& e) {
      err << "usage error: " << e.what() << "\n";
      return Exit::error;
    }

    auto   start = std::chrono::steady_clock::now();
    Report r;
    try {
      r = action();
    } catch (std::exception const& e) {
      r.status           = "error";
      r.payload          = json::object();
      r.payload["error"] = e.what();
    }
    std::optional<double> ms;
    if (timing) {
      ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
               .count();
    }
    std::string command = join(args);
    if (as_json) {
      json j{{"command", command}, {"status", r.status}, {"result", r.payload}};
      if (ms) {
        j["elapsed_ms"] = *ms;
      }
      out << j.dump(2) << "\n";
    } else {
      render_text(out, command, r, ms);
    }
    return exit_code(r);
  }

}  // namespace orbibraid::cli
