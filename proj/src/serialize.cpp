#include "cartan/serialize.hpp"

#include <stdexcept>

namespace cartan {

using nlohmann::json;

namespace {

json sharp_json(const std::optional<SharpBound>& s) {
  if (!s) return nullptr;
  return {{"value", to_string(s->value)}, {"source", s->source}};
}

}  // namespace

json to_json(const GradedAbelianGroup& g) {
  json out = json::object();
  for (std::size_t n = 0; n <= g.max_degree(); ++n) {
    const DegreeComponent& c = g.at(n);
    json torsion = json::array();
    for (const Integer& t : c.torsion) torsion.push_back(to_string(t));
    out[std::to_string(n)] = {{"free", c.free_rank}, {"torsion", torsion}};
  }
  return out;
}

GradedAbelianGroup graded_from_json(const json& j) {
  if (!j.is_object() || j.empty()) throw std::invalid_argument("graded group JSON must be a nonempty object");
  std::size_t cap = 0;
  for (const auto& [key, value] : j.items()) cap = std::max<std::size_t>(cap, std::stoul(key));
  GradedAbelianGroup g(cap);
  for (const auto& [key, value] : j.items()) {
    DegreeComponent c;
    c.free_rank = value.at("free").get<std::size_t>();
    for (const auto& t : value.at("torsion")) c.torsion.push_back(parse_integer(t.get<std::string>()));
    g.set_component(std::stoul(key), std::move(c));
  }
  return g;
}

json to_json(const BoundReport& r) {
  json primes = json::array();
  for (const PrimeBound& p : r.primes)
    primes.push_back({{"p", p.p}, {"r", p.r}, {"bound", to_string(p.bound)}});
  return {{"n", r.n},
          {"d", r.d},
          {"primes", primes},
          {"theorem_a", to_string(r.theorem_a_bound)},
          {"corollary_b", r.corollary_b_applies},
          {"sharp", sharp_json(r.known_sharp)}};
}

BoundReport bound_report_from_json(const json& j) {
  BoundReport r;
  r.n = j.at("n").get<std::uint64_t>();
  r.d = j.at("d").get<std::uint64_t>();
  for (const auto& p : j.at("primes"))
    r.primes.push_back({p.at("p").get<std::uint64_t>(), p.at("r").get<unsigned>(),
                        parse_integer(p.at("bound").get<std::string>())});
  r.theorem_a_bound = parse_integer(j.at("theorem_a").get<std::string>());
  r.corollary_b_applies = j.at("corollary_b").get<bool>();
  const json& sharp = j.at("sharp");
  if (!sharp.is_null())
    r.known_sharp = SharpBound{parse_integer(sharp.at("value").get<std::string>()),
                               sharp.at("source").get<std::string>()};
  return r;
}

json to_json(const BoundComparison& c) {
  return {{"n", c.n},
          {"d", c.d},
          {"theorem_a", to_string(c.theorem_a_bound)},
          {"sharp", sharp_json(c.known_sharp)},
          {"ratio", c.ratio ? json(to_string(*c.ratio)) : json(nullptr)},
          {"sharp_strictly_better", c.sharp_strictly_better}};
}

json to_json(const WordEntry& w, bool ascii) {
  return {{"word", to_string(w.word, ascii)}, {"degree", w.degree}, {"height", w.height}};
}

}  // namespace cartan
