#include "a2lab/json_io.hpp"

namespace a2lab {

Json rational_json(const Rational& q) { return rat_to_string(q); }

Rational rational_from_json(const Json& j) {
  return rat_from_string(j.get<std::string>());
}

Json quad_json(const QuadScalar& v) {
  return Json{{"a", rat_to_string(v.ratpart())},
              {"b", rat_to_string(v.surdpart())},
              {"D", rat_to_string(v.disc())}};
}

QuadScalar quad_from_json(const Json& j) {
  return QuadScalar::make(rational_from_json(j.at("a")),
                          rational_from_json(j.at("b")),
                          rational_from_json(j.at("D")));
}

Json pcf_json(const PiecewiseFn& f) {
  Json j;
  j["domain"] = Json{{"lo", rational_json(f.domain_lo())},
                     {"hi", rational_json(f.domain_hi())}};
  Json bps = Json::array();
  for (const Rational& b : f.interior_breakpoints()) bps.push_back(rational_json(b));
  j["breakpoints"] = std::move(bps);
  Json vals = Json::array();
  for (size_t i = 0; i < f.piece_count(); ++i) vals.push_back(quad_json(f.value(i)));
  j["values"] = std::move(vals);
  return j;
}

PiecewiseFn pcf_from_json(const Json& j) {
  const Rational lo = rational_from_json(j.at("domain").at("lo"));
  const Rational hi = rational_from_json(j.at("domain").at("hi"));
  std::vector<Rational> bps;
  for (const Json& b : j.at("breakpoints")) bps.push_back(rational_from_json(b));
  std::vector<Piece> pieces;
  Rational x = lo;
  size_t i = 0;
  for (const Json& v : j.at("values")) {
    const Rational& next = i < bps.size() ? bps[i] : hi;
    pieces.push_back({x, next, quad_from_json(v)});
    x = next;
    ++i;
  }
  return PiecewiseFn::from_pieces(std::move(pieces));
}

Json params_json(const WeightParams& p) {
  Json j;
  j["k"] = p.k;
  j["t"] = p.t ? Json(rat_to_string(*p.t)) : Json(nullptr);
  j["epsilon"] = rational_json(p.epsilon);
  j["p"] = rational_json(p.p);
  j["D"] = rational_json(p.disc);
  j["n"] = p.n;
  j["nu"] = p.nu;
  return j;
}

WeightParams params_from_json(const Json& j) {
  WeightParams p = derive_params_from_k(j.at("k").get<long>(),
                                        j.at("nu").get<long>());
  if (!j.at("t").is_null()) p.t = rat_from_string(j.at("t").get<std::string>());
  if (rational_json(p.epsilon) != j.at("epsilon") ||
      rational_json(p.p) != j.at("p") || rational_json(p.disc) != j.at("D") ||
      p.n != j.at("n").get<long>())
    throw std::invalid_argument("parameter block is inconsistent");
  return p;
}

Json weight_json(const ConstructedWeight& cw) {
  Json j;
  j["schema"] = "a2lab-weight/1";
  j["params"] = params_json(cw.params);
  Json pieces = Json::array();
  for (size_t i = 0; i < cw.w.piece_count(); ++i) {
    pieces.push_back(Json{{"lo", rational_json(cw.w.piece_lo(i))},
                          {"hi", rational_json(cw.w.piece_hi(i))},
                          {"value", quad_json(cw.w.value(i))},
                          {"region", region_kind_name(cw.tags[i].kind)},
                          {"level", cw.tags[i].level}});
  }
  j["pieces"] = std::move(pieces);
  Json tails = Json::array();
  for (const TailRecord& t : cw.tails)
    tails.push_back(Json{{"lo", rational_json(t.lo)},
                         {"hi", rational_json(t.hi)},
                         {"level", t.level},
                         {"node", t.node_index}});
  j["tails"] = std::move(tails);
  Json nodes = Json::array();
  for (const BuildNode& n : cw.nodes)
    nodes.push_back(Json{{"lo", rational_json(n.lo)},
                         {"hi", rational_json(n.hi)},
                         {"level", n.level},
                         {"depth", n.depth},
                         {"first_piece", n.first_piece},
                         {"piece_count", n.piece_count},
                         {"parent", n.parent}});
  j["nodes"] = std::move(nodes);
  Json tilde = Json::array();
  for (size_t i = 0; i < cw.w_tilde.piece_count(); ++i)
    tilde.push_back(rational_json(cw.w_tilde.value(i).as_rational()));
  j["w_tilde"] = std::move(tilde);
  Json sigma = Json::array();
  for (size_t i = 0; i < cw.sigma.piece_count(); ++i)
    sigma.push_back(quad_json(cw.sigma.value(i)));
  j["sigma"] = std::move(sigma);
  return j;
}

ConstructedWeight weight_from_json(const Json& j) {
  if (j.at("schema") != "a2lab-weight/1")
    throw std::invalid_argument("unknown weight schema");
  const WeightParams prm = params_from_json(j.at("params"));

  std::vector<Piece> pieces;
  std::vector<RegionTag> tags;
  for (const Json& p : j.at("pieces")) {
    pieces.push_back({rational_from_json(p.at("lo")), rational_from_json(p.at("hi")),
                      quad_from_json(p.at("value"))});
    tags.push_back({region_kind_from_name(p.at("region").get<std::string>()),
                    p.at("level").get<long>()});
  }
  PiecewiseFn w = PiecewiseFn::from_pieces(pieces);

  std::vector<TailRecord> tails;
  for (const Json& t : j.at("tails"))
    tails.push_back({rational_from_json(t.at("lo")), rational_from_json(t.at("hi")),
                     t.at("level").get<long>(), t.at("node").get<size_t>()});
  std::vector<BuildNode> nodes;
  for (const Json& n : j.at("nodes"))
    nodes.push_back({rational_from_json(n.at("lo")), rational_from_json(n.at("hi")),
                     n.at("level").get<long>(), n.at("depth").get<long>(),
                     n.at("first_piece").get<size_t>(),
                     n.at("piece_count").get<size_t>(),
                     n.at("parent").get<long>()});

  std::vector<Piece> tilde;
  size_t i = 0;
  for (const Json& v : j.at("w_tilde")) {
    tilde.push_back({w.piece_lo(i), w.piece_hi(i),
                     QuadScalar(rat_from_string(v.get<std::string>()))});
    ++i;
  }
  std::vector<Piece> sigma;
  i = 0;
  for (const Json& v : j.at("sigma")) {
    sigma.push_back({w.piece_lo(i), w.piece_hi(i), quad_from_json(v)});
    ++i;
  }
  return ConstructedWeight{prm,
                           w,
                           PeriodicFn(w),
                           std::move(tags),
                           std::move(tails),
                           std::move(nodes),
                           PiecewiseFn::from_pieces(std::move(tilde)),
                           PiecewiseFn::from_pieces(std::move(sigma))};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace a2lab
