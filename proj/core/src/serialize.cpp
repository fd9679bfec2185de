#include "birat/serialize.hpp"

namespace birat {

namespace {

Json polys_to_json(const std::vector<Polynomial>& ps) {
  Json arr = Json::array();
  for (const auto& p : ps) arr.push_back(p.to_string());
  return arr;
}

std::vector<Polynomial> polys_from_json(const Json& arr, const ContextPtr& ctx) {
  std::vector<Polynomial> out;
  for (const auto& s : arr) out.push_back(parse_polynomial(ctx, s.get<std::string>()));
  return out;
}

}  // namespace

Json ring_to_json(const RingPresentation& B) {
  Json j;
  j["vars"] = B.context()->names();
  j["relations"] = polys_to_json(B.relations().generators());
  return j;
}

RingPresentation ring_from_json(const Json& j) {
  ContextPtr ctx = make_context(j.at("vars").get<std::vector<std::string>>());
  std::vector<Polynomial> rels =
      j.contains("relations") ? polys_from_json(j.at("relations"), ctx) : std::vector<Polynomial>{};
  return RingPresentation::quotient(ctx, rels);
}

Json pair_to_json(const PairOfRings& p) {
  Json j = ring_to_json(p.B());
  j["A_gens"] = polys_to_json(p.A_gens());
  return j;
}

PairOfRings pair_from_json(const Json& j) {
  RingPresentation B = ring_from_json(j);
  std::vector<Polynomial> A_gens =
      j.contains("A_gens") ? polys_from_json(j.at("A_gens"), B.context())
                           : std::vector<Polynomial>{};
  return PairOfRings(std::move(B), std::move(A_gens));
}

Json hom_to_json(const PairHom& h) {
  Json j;
  j["source"] = pair_to_json(h.source());
  j["target"] = pair_to_json(h.target());
  j["images"] = polys_to_json(h.images());
  return j;
}

PairHom hom_from_json(const Json& j) {
  PairOfRings source = pair_from_json(j.at("source"));
  PairOfRings target = pair_from_json(j.at("target"));
  std::vector<Polynomial> images = polys_from_json(j.at("images"), target.B().context());
  return PairHom(std::move(source), std::move(target), std::move(images));
}

Json value_to_json(const ValueVector& v) {
  if (v.zero_sym) return nullptr;
  Json arr = Json::array();
  for (long long e : v.entries) arr.push_back(e);
  return arr;
}

Json valuation_to_json(const Valuation& v) {
  Json j;
  if (const auto* t = std::get_if<TrivialData>(&v.node())) {
    j["kind"] = "trivial";
    j["prime"] = polys_to_json(t->prime_gens);
    return j;
  }
  if (const auto* w = std::get_if<WeightData>(&v.node())) {
    j["kind"] = "weight";
    j["rank"] = w->rank;
    Json ws = Json::array();
    for (const auto& wt : w->weights) ws.push_back(value_to_json(wt));
    j["weights"] = ws;
    return j;
  }
  if (const auto* c = std::get_if<CompositeData>(&v.node())) {
    j["kind"] = "composite";
    j["prime"] = polys_to_json(c->prime_gens);
    j["quotient"] = ring_to_json(*c->quotient);
    j["residue_images"] = polys_to_json(c->residue_images);
    j["quotient_lifts"] = polys_to_json(c->quotient_lifts);
    Json inner;
    inner["rank"] = c->inner.rank;
    Json ws = Json::array();
    for (const auto& wt : c->inner.weights) ws.push_back(value_to_json(wt));
    inner["weights"] = ws;
    j["inner"] = inner;
    return j;
  }
  const auto& pb = std::get<PullbackData>(v.node());
  j["kind"] = "pullback";
  j["hom"] = hom_to_json(*pb.hom);
  j["inner"] = valuation_to_json(*pb.inner);
  j["truncate"] = pb.cutoff;
  return j;
}

namespace {

std::vector<ValueVector> weights_from_json(const Json& arr) {
  std::vector<ValueVector> ws;
  for (const auto& w : arr) ws.push_back(ValueVector::of(w.get<std::vector<long long>>()));
  return ws;
}

}  // namespace

Valuation valuation_from_json(const Json& j, const RingPresentation& B) {
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "trivial") {
    return Valuation::trivial(B, polys_from_json(j.at("prime"), B.context()));
  }
  if (kind == "weight") {
    return Valuation::weight(B, weights_from_json(j.at("weights")));
  }
  if (kind == "composite") {
    RingPresentation quotient = ring_from_json(j.at("quotient"));
    std::vector<Polynomial> prime = polys_from_json(j.at("prime"), B.context());
    WeightData inner;
    inner.weights = weights_from_json(j.at("inner").at("weights"));
    inner.rank = j.at("inner").at("rank").get<int>();
    GroebnerBasis prime_gb = extend_basis(B.relations(), prime);
    CompositeData data{std::move(prime), std::move(prime_gb),
                       std::make_shared<const RingPresentation>(quotient),
                       polys_from_json(j.at("residue_images"), quotient.context()),
                       polys_from_json(j.at("quotient_lifts"), B.context()), std::move(inner)};
    return Valuation::composite(B, std::move(data));
  }
  if (kind == "pullback") {
    PairHom hom = hom_from_json(j.at("hom"));
    if (!same_context(hom.source().B().context(), B.context()))
      throw Error("pullback valuation: hom source does not match the ambient ring");
    Valuation inner = valuation_from_json(j.at("inner"), hom.target().B());
    PullbackData data{std::make_shared<const PairHom>(std::move(hom)),
                      std::make_shared<const Valuation>(std::move(inner)),
                      j.value("truncate", 1)};
    return Valuation::pullback_node(B, std::move(data));
  }
  throw Error("unknown valuation kind: " + kind);
}

Json domain_to_json(const RationalDomain& d) {
  Json j;
  j["pair"] = pair_to_json(d.pair());
  j["numerators"] = polys_to_json(d.numerators());
  j["denominator"] = d.denominator().to_string();
  return j;
}

RationalDomain domain_from_json(const Json& j) {
  return domain_from_json(j, pair_from_json(j.at("pair")));
}

RationalDomain domain_from_json(const Json& j, const PairOfRings& base) {
  const ContextPtr& ctx = base.B().context();
  return RationalDomain(base, polys_from_json(j.at("numerators"), ctx),
                        parse_polynomial(ctx, j.at("denominator").get<std::string>()));
}

Json covering_to_json(const Covering& c) {
  Json j;
  j["base"] = pair_to_json(c.base);
  Json arr = Json::array();
  for (const auto& d : c.domains) {
    Json dj;
    dj["numerators"] = polys_to_json(d.numerators());
    dj["denominator"] = d.denominator().to_string();
    arr.push_back(dj);
  }
  j["domains"] = arr;
  return j;
}

Covering covering_from_json(const Json& j) {
  PairOfRings base = pair_from_json(j.at("base"));
  Covering c{base, {}};
  for (const auto& dj : j.at("domains")) c.domains.push_back(domain_from_json(dj, base));
  return c;
}

Json module_to_json(const ModuleE& e) {
  Json j;
  j["pair"] = pair_to_json(e.pair());
  j["E"] = polys_to_json(e.gens());
  return j;
}

ModuleE module_from_json(const Json& j) {
  PairOfRings pair = pair_from_json(j.at("pair"));
  std::vector<Polynomial> gens = polys_from_json(j.at("E"), pair.B().context());
  return ModuleE(std::move(pair), std::move(gens));
}

Json monomial_pair_to_json(const MonomialPair& mp) {
  Json j;
  j["rank"] = mp.rank;
  j["M_gens"] = mp.M_gens;
  j["N_gens"] = mp.N_gens;
  return j;
}

MonomialPair monomial_pair_from_json(const Json& j) {
  MonomialPair mp;
  mp.rank = j.at("rank").get<int>();
  mp.M_gens = j.at("M_gens").get<std::vector<LatticeVector>>();
  mp.N_gens = j.at("N_gens").get<std::vector<LatticeVector>>();
  return mp;
}

Json corpus_to_json(const PairOfRings& pair, const ProbeCorpus& corpus) {
  Json j;
  j["pair"] = pair_to_json(pair);
  Json arr = Json::array();
  for (const auto& v : corpus.probes) arr.push_back(valuation_to_json(v));
  j["probes"] = arr;
  return j;
}

ProbeCorpus corpus_from_json(const Json& j, const PairOfRings& pair) {
  ProbeCorpus corpus;
  for (const auto& vj : j.at("probes"))
    corpus.probes.push_back(valuation_from_json(vj, pair.B()));
  return corpus;
}

}  // namespace birat
