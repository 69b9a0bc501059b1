#pragma once

// Command layer shared by the brsym executable and the tests. run() never
// exits the process; it writes the report and returns the exit status.

#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "brsym/characters.hpp"
#include "brsym/harness.hpp"
#include "brsym/obasis.hpp"
#include "brsym/orbits.hpp"
#include "brsym/report.hpp"
#include "brsym/symmetrize.hpp"

namespace brsym::cli {

enum ExitStatus : int {
  kOk = 0,
  kDisagreement = 1,
  kInvalidParameters = 2,
  kCeilingExceeded = 3,
};

enum class Format { Structured, Human };

struct CommandConfig {
  std::string subcommand;  // table | brauer | orbits | gram | obasis | verify
  std::vector<int> n;
  std::vector<int> p;
  std::vector<int> d;
  std::vector<int> dimv;
  std::string character;              // "psi:j" or "chi:h"; Brauer when p is given
  std::optional<std::vector<int>> orbit;  // gram: orbit representative
  std::string theorem;                // verify: theorem id, or "all"
  Format format = Format::Structured;
  double work_ceiling = 0;  // 0: BRSYM_WORK_CEILING or the built-in default
  bool keep_going = false;
  int threads = 1;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct CharacterSelector {
  bool linear = true;
  int index = 0;
};

inline CharacterSelector parse_character(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw UsageError("character must look like psi:j or chi:h, got '" + text + "'");
  const std::string kind = text.substr(0, colon);
  if (kind != "psi" && kind != "chi") throw UsageError("character kind must be psi or chi, got '" + kind + "'");
  int index = 0;
  try {
    std::size_t used = 0;
    index = std::stoi(text.substr(colon + 1), &used);
    if (used != text.size() - colon - 1) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    throw UsageError("character index is not an integer in '" + text + "'");
  }
  return {kind == "psi", index};
}

namespace detail {

inline int single(const std::vector<int>& v, const char* name) {
  if (v.size() != 1) throw UsageError(std::string("exactly one --") + name + " is required");
  return v.front();
}

inline std::optional<int> optional_single(const std::vector<int>& v, const char* name) {
  if (v.empty()) return std::nullopt;
  return single(v, name);
}

inline void check_n(int n) {
  if (n < 1) throw UsageError("n must be >= 1");
}

inline void check_prime(int p) {
  if (!brsym::detail::is_prime(p)) throw UsageError("p must be prime, got " + std::to_string(p));
}

inline CharacterFn select_character(const DicyclicGroup& G, const std::string& text, std::optional<int> p) {
  if (text.empty()) throw UsageError("--char is required");
  const auto sel = parse_character(text);
  CharacterFn chi = [&] {
    if (sel.linear) {
      if (sel.index < 0 || sel.index > 3) throw UsageError("psi index must be in 0..3");
      return linear_character(G, sel.index);
    }
    if (sel.index < 1 || sel.index > G.n() - 1) {
      throw UsageError("chi index must be in 1..n-1 = 1.." + std::to_string(G.n() - 1));
    }
    return degree2_character(G, sel.index);
  }();
  if (!p) return chi;
  if (sel.linear && sel.index >= linear_brauer_count(*p)) {
    throw UsageError("for p = 2 the only linear Brauer character is psi:0");
  }
  return brauer_restriction(G, chi, *p);
}

struct SpaceChoice {
  bool tensor = false;
  int value = 0;
};

inline SpaceChoice select_space(const CommandConfig& c) {
  if (!c.d.empty() && !c.dimv.empty()) throw UsageError("give either --d or --dimv, not both");
  if (!c.d.empty()) {
    const int d = single(c.d, "d");
    if (d < 1) throw UsageError("d must be >= 1");
    return {false, d};
  }
  if (!c.dimv.empty()) {
    const int dim = single(c.dimv, "dimv");
    if (dim < 1) throw UsageError("dimv must be >= 1");
    return {true, dim};
  }
  throw UsageError("one of --d or --dimv is required");
}

inline void check_ceiling(const CommandConfig& c, int n, const SpaceChoice& s) {
  const ParameterPoint pt{n, 0, s.value, 0, s.tensor};
  const double ceiling = c.work_ceiling > 0 ? c.work_ceiling : default_work_ceiling();
  const double work = work_units(pt);
  if (work > ceiling) throw WorkCeilingExceeded(pt, work, ceiling);
}

class Writer {
 public:
  Writer(std::ostream& os, Format f) : os_(os), format_(f) {}
  bool human() const { return format_ == Format::Human; }
  void json(const report::Json& j) {
    if (!human()) report::write_line(os_, j);
  }
  std::ostream& text() { return os_; }

 private:
  std::ostream& os_;
  Format format_;
};

inline std::string yes_no(bool b) { return b ? "true" : "false"; }

inline int run_table(const CommandConfig& c, Writer& w) {
  const int n = single(c.n, "n");
  check_n(n);
  const auto p = optional_single(c.p, "p");
  if (p) check_prime(*p);
  const DicyclicGroup G(n);
  const auto classes = G.conjugacy_classes();
  report::Json params = {{"n", n}};
  if (p) params["p"] = *p;
  w.json(report::header("table", params));
  auto emit = [&](const CharacterFn& phi, const std::vector<std::vector<DicyclicElement>>& cls) {
    if (w.human()) {
      w.text() << std::left << std::setw(8) << (phi.label() + (phi.brauer() ? "^" : ""));
      for (const auto& k : cls) {
        if (phi.in_domain(G.index(k.front()))) w.text() << "  " << phi(G.index(k.front())).to_string(false);
      }
      w.text() << '\n';
    } else {
      w.json(report::character_row(G, phi, cls));
    }
  };
  if (w.human()) {
    w.text() << "T_" << G.order() << ", z = exp(2 pi i / " << G.order() << "), classes:";
    for (const auto& k : classes) w.text() << ' ' << to_string(k.front());
    w.text() << '\n';
  }
  for (const auto& chi : character_table(G)) emit(chi, classes);
  if (p) {
    const auto reg = p_regular_classes(G, *p);
    if (w.human()) {
      w.text() << "Brauer characters, p = " << *p << ", classes:";
      for (const auto& k : reg) w.text() << ' ' << to_string(k.front());
      w.text() << '\n';
    }
    for (const auto& phi : brauer_characters(G, *p)) emit(phi, reg);
  }
  return kOk;
}

inline int run_brauer(const CommandConfig& c, Writer& w) {
  const int n = single(c.n, "n");
  check_n(n);
  const int p = single(c.p, "p");
  check_prime(p);
  const DicyclicGroup G(n);
  const auto split = split_order(n, p);
  const auto reg = p_regular_elements(G, p);
  const auto classes = p_regular_classes(G, p);
  const auto chars = brauer_characters(G, p);
  if (w.human()) {
    w.text() << "4n = " << G.order() << " = " << p << "^" << split.t << " * " << split.l << '\n';
    w.text() << "p-regular elements (" << reg.size() << "):";
    for (const auto& g : reg) w.text() << ' ' << to_string(g);
    w.text() << "\np-regular classes: " << classes.size() << "\nBrauer characters: " << chars.size() << '\n';
    for (const auto& phi : chars) w.text() << "  " << phi.label() << "^ degree " << phi.degree() << '\n';
    return kOk;
  }
  w.json(report::header("brauer", {{"n", n}, {"p", p}}));
  w.json({{"record", "split"}, {"t", split.t}, {"p_power", split.p_power}, {"l", split.l}});
  w.json({{"record", "regular_elements"}, {"elements", report::elements(reg)}});
  report::Json cls = report::Json::array();
  for (const auto& k : classes) cls.push_back(report::elements(k));
  w.json({{"record", "regular_classes"}, {"count", classes.size()}, {"classes", cls}});
  for (const auto& phi : chars) {
    auto row = report::character_row(G, phi, classes);
    row["record"] = "character";
    w.json(row);
  }
  return kOk;
}

template <class Tuple>
void emit_orbit(Writer& w, const OrbitData<Tuple>& o) {
  const auto& rep = brsym::detail::raw(o.representative);
  if (w.human()) {
    w.text() << to_string(rep) << "  size " << o.size() << "  stabilizer " << o.stabilizer.size() << '\n';
  } else {
    w.json({{"representative", rep},
            {"orbit_size", o.size()},
            {"stabilizer", report::elements(o.stabilizer)},
            {"transversal", report::elements(o.transversal)}});
  }
}

inline int run_orbits(const CommandConfig& c, Writer& w) {
  const int n = single(c.n, "n");
  check_n(n);
  const auto space = select_space(c);
  check_ceiling(c, n, space);
  const DicyclicGroup G(n);
  w.json(report::header("orbits", {{"n", n}, {space.tensor ? "dimV" : "d", space.value}}));
  std::size_t count = 0, total = 0;
  if (space.tensor) {
    for_each_tensor_orbit(G, space.value, [&](OrbitData<Sequence>&& o) {
      ++count;
      total += o.size();
      emit_orbit(w, o);
      return true;
    });
  } else {
    for_each_poly_orbit(G, space.value, [&](OrbitData<MultiIndex>&& o) {
      ++count;
      total += o.size();
      emit_orbit(w, o);
      return true;
    });
  }
  if (w.human()) {
    w.text() << count << " orbits covering " << total << " basis elements\n";
  } else {
    w.json({{"summary", {{"orbits", count}, {"basis_size", total}}}});
  }
  return kOk;
}

template <class Tuple, class Space>
int emit_gram(Writer& w, const DicyclicGroup& G, const Tuple& x, const CharacterFn& phi, const Space& space,
              report::Json params) {
  const auto orbit = orbit_of(G, x);
  GramKernel kernel(G, phi);
  std::vector<int> stab;
  for (const auto& s : orbit.stabilizer) stab.push_back(G.index(s));
  const auto vectors = brsym::detail::translates(G, orbit, phi, space);
  std::vector<std::vector<Cyclotomic>> gram;
  bool direct_agrees = true;
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    std::vector<Cyclotomic> row;
    for (std::size_t j = 0; j < orbit.size(); ++j) {
      row.push_back(brsym::detail::SpaceTraits<Tuple>::gram(kernel, stab, G.index(orbit.transversal[i]),
                                                           G.index(orbit.transversal[j])));
      if (row.back() != inner_direct(vectors[i], vectors[j])) direct_agrees = false;
    }
    gram.push_back(std::move(row));
  }
  const auto rank = brsym::detail::rank_of(orbit, vectors);
  const auto& rep = brsym::detail::raw(orbit.representative);
  if (w.human()) {
    w.text() << "orbit " << to_string(rep) << ", " << phi.label() << (phi.brauer() ? "^" : "") << ", rank " << rank
             << ", closed form matches direct expansion: " << yes_no(direct_agrees) << '\n';
    for (std::size_t i = 0; i < gram.size(); ++i) {
      w.text() << std::left << std::setw(10) << to_string(orbit.transversal[i]);
      for (const auto& e : gram[i]) w.text() << "  " << e.to_string();
      w.text() << '\n';
    }
  } else {
    params["representative"] = rep;
    w.json(report::header("gram", params));
    w.json({{"representative", rep},
            {"character", report::character(phi)},
            {"translates", report::elements(orbit.transversal)},
            {"rank", rank},
            {"direct_agrees", direct_agrees},
            {"gram", report::gram_matrix(gram)}});
  }
  return direct_agrees ? kOk : kDisagreement;
}

inline int run_gram(const CommandConfig& c, Writer& w) {
  const int n = single(c.n, "n");
  check_n(n);
  const auto p = optional_single(c.p, "p");
  if (p) check_prime(*p);
  const auto space = select_space(c);
  const DicyclicGroup G(n);
  const auto phi = select_character(G, c.character, p);
  const ParameterPoint pt{n, p.value_or(0), space.value, 0, space.tensor};
  std::vector<int> x = c.orbit ? *c.orbit : brsym::detail::witness_tuple(pt);
  if (x.size() != static_cast<std::size_t>(G.order())) {
    throw UsageError("orbit representative must have " + std::to_string(G.order()) + " entries");
  }
  report::Json params = {{"n", n}, {space.tensor ? "dimV" : "d", space.value}, {"char", c.character}};
  if (p) params["p"] = *p;
  if (space.tensor) {
    if (!is_valid(G, Sequence{x}, space.value)) throw UsageError("orbit entries must lie in 1..dimV");
    return emit_gram(w, G, Sequence{x}, phi, TensorSpace{space.value}, params);
  }
  if (!is_valid(G, MultiIndex{x}, space.value)) throw UsageError("orbit entries must be >= 0 and sum to d");
  return emit_gram(w, G, MultiIndex{x}, phi, PolySpace{space.value}, params);
}

inline int run_obasis(const CommandConfig& c, Writer& w) {
  const int n = single(c.n, "n");
  check_n(n);
  const auto p = optional_single(c.p, "p");
  if (p) check_prime(*p);
  const auto space = select_space(c);
  check_ceiling(c, n, space);
  const DicyclicGroup G(n);
  const auto phi = select_character(G, c.character, p);
  const auto rep = space.tensor ? decide_obasis(G, TensorSpace{space.value}, phi)
                                : decide_obasis(G, PolySpace{space.value}, phi);
  if (w.human()) {
    w.text() << (space.tensor ? "tensors, dimV = " : "polynomials, d = ") << space.value << ", n = " << n << ", "
             << phi.label() << (phi.brauer() ? "^ p = " + std::to_string(*p) : "") << '\n';
    for (const auto& o : rep.orbits) {
      w.text() << "  " << to_string(o.representative) << "  rank " << o.rank << "  o-basis "
               << yes_no(o.has_obasis) << "  nodes " << o.search_nodes << '\n';
    }
    w.text() << "dimension " << rep.total_dimension << ", verdict " << yes_no(rep.verdict) << '\n';
    return kOk;
  }
  report::Json params = {{"n", n}, {space.tensor ? "dimV" : "d", space.value}, {"char", c.character}};
  if (p) params["p"] = *p;
  w.json(report::header("obasis", params));
  for (const auto& o : rep.orbits) w.json(report::orbit_record(o));
  w.json({{"summary", report::obasis_summary(rep)}});
  return kOk;
}

inline int run_verify(const CommandConfig& c, Writer& w) {
  if (c.theorem.empty()) throw UsageError("--theorem is required (an id such as 2.4, or all)");
  std::vector<SweepSpec> sweeps;
  if (c.theorem == "all") {
    sweeps = default_sweeps();
  } else {
    Theorem t;
    try {
      t = parse_theorem(c.theorem);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    SweepSpec s;
    s.theorem = t;
    s.ns = c.n;
    s.primes = c.p;
    s.spaces = is_tensor_theorem(t) ? c.dimv : c.d;
    if (!c.character.empty()) s.indices = {parse_character(c.character).index};
    if (s.ns.empty()) throw UsageError("--n is required");
    for (int n : s.ns) check_n(n);
    for (int p : s.primes) check_prime(p);
    sweeps.push_back(std::move(s));
  }
  report::Json params = {{"theorem", c.theorem}, {"n", c.n}, {"p", c.p}, {"d", c.d}, {"dimV", c.dimv}};
  w.json(report::header("verify", params));
  std::size_t total = 0, agreed = 0;
  for (auto& s : sweeps) {
    s.stop_on_disagreement = !c.keep_going;
    s.work_ceiling = c.work_ceiling;
    s.threads = c.threads;
    std::vector<VerificationRecord> records;
    try {
      records = verify(s);
    } catch (const WorkCeilingExceeded&) {
      throw;
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    for (const auto& r : records) {
      ++total;
      agreed += r.agree;
      if (w.human()) {
        w.text() << std::left << std::setw(24) << to_string(r.theorem) << std::setw(30) << to_string(r.point)
                 << std::setw(8) << r.character << "predicted " << std::setw(6) << yes_no(r.predicted)
                 << "computed " << std::setw(6) << yes_no(r.computed) << (r.agree ? "agree" : "DISAGREE") << '\n';
      } else {
        w.json(report::verification(r));
      }
    }
    if (!c.keep_going && agreed != total) break;
  }
  if (w.human()) {
    w.text() << total << " records, " << agreed << " agree, " << (total - agreed) << " disagree\n";
  } else {
    w.json({{"summary", {{"records", total}, {"agree", agreed}, {"disagree", total - agreed}}}});
  }
  return agreed == total ? kOk : kDisagreement;
}

}  // namespace detail

/// Runs one command. Diagnostics go to err; the report goes to out.
inline int run(const CommandConfig& config, std::ostream& out, std::ostream& err) {
  std::ostringstream buffer;
  detail::Writer w(buffer, config.format);
  int status = kOk;
  try {
    if (config.work_ceiling < 0) throw UsageError("work ceiling must be positive");
    if (config.threads < 1) throw UsageError("threads must be >= 1");
    const auto& cmd = config.subcommand;
    if (cmd == "table") {
      status = detail::run_table(config, w);
    } else if (cmd == "brauer") {
      status = detail::run_brauer(config, w);
    } else if (cmd == "orbits") {
      status = detail::run_orbits(config, w);
    } else if (cmd == "gram") {
      status = detail::run_gram(config, w);
    } else if (cmd == "obasis") {
      status = detail::run_obasis(config, w);
    } else if (cmd == "verify") {
      status = detail::run_verify(config, w);
    } else {
      throw UsageError("unknown subcommand '" + cmd + "'");
    }
  } catch (const WorkCeilingExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kCeilingExceeded;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidParameters;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidParameters;
  }
  out << buffer.str();
  return status;
}

}  // namespace brsym::cli
