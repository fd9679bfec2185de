// Batch front end: one JSON request on stdin (or --file), one JSON
// response on stdout. Exit codes: 0 ok, 1 domain error, 2 malformed input.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "birat/integral.hpp"
#include "birat/maps.hpp"
#include "birat/serialize.hpp"
#include "birat/sheaf.hpp"

namespace {

using birat::Json;

struct Options {
  std::string file;
  std::string probes_file;
  int degree_bound = 6;
  unsigned seed = 2024;
};

birat::ProbeCorpus load_probes(const Options& opt, const birat::PairOfRings& pair) {
  if (opt.probes_file.empty()) {
    birat::ProbeOptions po;
    po.seed = opt.seed;
    return birat::default_probe_corpus(pair, po);
  }
  std::ifstream in(opt.probes_file);
  if (!in) throw birat::Error("cannot open probes file: " + opt.probes_file);
  Json j = Json::parse(in);
  return birat::corpus_from_json(j, pair);
}

Json level_to_json(int level, int rank) {
  if (level > rank) return nullptr;  // the spec's "infinity"
  return level;
}

Json dispatch(const Json& req, const Options& opt) {
  const std::string command = req.at("command").get<std::string>();
  Json result;

  if (command == "eval") {
    birat::PairOfRings pair = birat::pair_from_json(req.at("pair"));
    birat::Valuation v = birat::valuation_from_json(req.at("valuation"), pair.B());
    birat::Polynomial f = pair.B().parse(req.at("f").get<std::string>());
    result["value"] = birat::value_to_json(birat::evaluate(v, f));
    return result;
  }

  if (command == "check-val") {
    birat::PairOfRings pair = birat::pair_from_json(req.at("pair"));
    birat::Valuation v = birat::valuation_from_json(req.at("valuation"), pair.B());
    bool a_val = birat::is_A_valuation(v, pair);
    result["is_A_valuation"] = a_val;
    if (a_val) {
      birat::InValVerdict verdict = birat::in_val(v, pair);
      result["in_val"] = verdict.value;
      result["exact"] = verdict.exact;
      result["cgamma_level"] = level_to_json(birat::cgamma_level(v), v.rank());
    }
    return result;
  }

  if (command == "retract") {
    birat::PairOfRings pair = birat::pair_from_json(req.at("pair"));
    birat::Valuation v = birat::valuation_from_json(req.at("valuation"), pair.B());
    birat::Valuation r = birat::retract(v, pair, opt.degree_bound);
    result["valuation"] = birat::valuation_to_json(r);
    return result;
  }

  if (command == "bir-map") {
    birat::PairHom hom = birat::hom_from_json(req.at("hom"));
    birat::Valuation v = birat::valuation_from_json(req.at("valuation"), hom.target().B());
    birat::Valuation w = birat::bir_map(hom, v, opt.degree_bound);
    result["valuation"] = birat::valuation_to_json(w);
    return result;
  }

  if (command == "domain") {
    birat::RationalDomain d = birat::domain_from_json(req.at("domain"));
    birat::LocalizedPair loc = birat::to_pair(d);
    result["pair"] = birat::pair_to_json(loc.pair);
    result["inverse_var"] = loc.pair.B().context()->name(loc.t_index);
    result["inclusion_images"] = Json::array();
    for (const auto& im : loc.inclusion.images())
      result["inclusion_images"].push_back(im.to_string());
    return result;
  }

  if (command == "intersect") {
    birat::RationalDomain d1 = birat::domain_from_json(req.at("d1"));
    birat::RationalDomain d2 = birat::domain_from_json(req.at("d2"), d1.pair());
    result["domain"] = birat::domain_to_json(birat::intersect(d1, d2));
    return result;
  }

  if (command == "refine-cover") {
    birat::Covering c = birat::covering_from_json(req.at("cover"));
    birat::RefinedCovering r = birat::refine_cover(c);
    result["cover"] = birat::covering_to_json(r.cover);
    result["assignment"] = r.assignment;
    Json prods = Json::array();
    for (const auto& p : r.products) prods.push_back(p.to_string());
    result["products"] = prods;
    return result;
  }

  if (command == "flatten") {
    birat::RationalDomain outer = birat::domain_from_json(req.at("outer"));
    birat::LocalizedPair loc = birat::to_pair(outer);
    const birat::ContextPtr& lctx = loc.pair.B().context();
    birat::InnerSpec inner;
    for (const auto& s : req.at("inner").at("numerators"))
      inner.numerators.push_back(birat::parse_polynomial(lctx, s.get<std::string>()));
    inner.denominator =
        birat::parse_polynomial(lctx, req.at("inner").at("denominator").get<std::string>());
    result["domain"] = birat::domain_to_json(birat::flatten(outer, inner));
    return result;
  }

  if (command == "blowup-charts") {
    birat::ModuleE e = birat::module_from_json(req.at("module"));
    Json charts = Json::array();
    for (const auto& c : birat::charts(e)) {
      Json cj;
      cj["index"] = c.index;
      cj["generator"] = c.generator.to_string();
      cj["pair"] = birat::pair_to_json(c.loc.pair);
      cj["invertible"] = birat::is_invertible_on_chart(e, c);
      charts.push_back(cj);
    }
    result["charts"] = charts;
    return result;
  }

  if (command == "normalize") {
    if (req.contains("monomial_pair")) {
      birat::MonomialPair mp = birat::monomial_pair_from_json(req.at("monomial_pair"));
      birat::MonomialNormalizationResult r = birat::relative_normalization(mp);
      result["monomial_pair"] = birat::monomial_pair_to_json(r.saturated);
      result["pair"] = birat::pair_to_json(r.pair);
      result["certified"] = r.certified;
    } else {
      birat::PairOfRings pair = birat::pair_from_json(req.at("pair"));
      birat::NormalizationResult r = birat::relative_normalization(pair, opt.degree_bound);
      result["pair"] = birat::pair_to_json(r.pair);
      result["bounded"] = r.bounded;
    }
    return result;
  }

  if (command == "is-adic") {
    birat::PairHom hom = birat::hom_from_json(req.at("hom"));
    birat::ProbeCorpus probes = load_probes(opt, hom.target());
    birat::AdicResult r = birat::is_adic(hom, opt.degree_bound, probes.probes);
    switch (r.verdict) {
      case birat::AdicVerdict::kAdic:
        result["verdict"] = "adic";
        break;
      case birat::AdicVerdict::kNotAdic:
        result["verdict"] = "not_adic";
        result["witness_probe"] =
            birat::valuation_to_json(probes.probes[static_cast<std::size_t>(r.witness_probe)]);
        break;
      case birat::AdicVerdict::kUnknown:
        result["verdict"] = "unknown";
        result["bound"] = r.bound;
        break;
    }
    return result;
  }

  if (command == "sheaf-check") {
    birat::Covering c = birat::covering_from_json(req.at("cover"));
    std::vector<birat::Polynomial> sections;
    for (std::size_t i = 0; i < c.domains.size(); ++i) {
      birat::LocalizedPair loc = birat::to_pair(c.domains[i]);
      sections.push_back(birat::parse_polynomial(
          loc.pair.B().context(), req.at("sections").at(i).get<std::string>()));
    }
    birat::EqualizerOutcome out = birat::sheaf_equalizer_check(c, sections, opt.degree_bound);
    switch (out.status) {
      case birat::EqualizerOutcome::Status::kGlued:
        result["status"] = "glued";
        result["glued"] = out.glued->to_string();
        result["in_O"] = out.glued_in_O;
        break;
      case birat::EqualizerOutcome::Status::kMismatch:
        result["status"] = "mismatch";
        result["mismatch"] = {{"i", out.mismatch_i},
                              {"j", out.mismatch_j},
                              {"witness", out.mismatch_witness->to_string()}};
        break;
      case birat::EqualizerOutcome::Status::kNoBoundedGluing:
        result["status"] = "no_bounded_gluing";
        break;
    }
    return result;
  }

  if (command == "tau") {
    birat::PairOfRings pair = birat::pair_from_json(req.at("pair"));
    birat::Valuation v = birat::valuation_from_json(req.at("valuation"), pair.B());
    birat::TauResult r = birat::tau(v, pair, opt.degree_bound);
    result["tags"] = r.tags;
    Json ideal = Json::array();
    for (const auto& g : r.ideal.generators()) ideal.push_back(g.to_string());
    result["ideal"] = ideal;
    Json arel = Json::array();
    for (const auto& g : r.A_relations.generators()) arel.push_back(g.to_string());
    result["A_relations"] = arel;
    result["exact"] = r.exact;
    return result;
  }

  if (command == "sigma") {
    birat::PairOfRings pair = birat::pair_from_json(req.at("pair"));
    std::vector<birat::Polynomial> prime;
    for (const auto& s : req.at("prime"))
      prime.push_back(pair.B().parse(s.get<std::string>()));
    birat::Valuation v = birat::sigma(pair, prime);
    result["valuation"] = birat::valuation_to_json(v);
    return result;
  }

  throw birat::Error("unknown command: " + command);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"affinoid birational space calculator"};
  Options opt;
  app.add_option("--file", opt.file, "read the request from a file instead of stdin");
  app.add_option("--probes", opt.probes_file, "probe corpus fixture (JSON)");
  app.add_option("--degree-bound", opt.degree_bound, "bound for degree-limited searches");
  app.add_option("--seed", opt.seed, "seed for generated probe corpora");
  CLI11_PARSE(app, argc, argv);

  Json req;
  try {
    if (!opt.file.empty()) {
      std::ifstream in(opt.file);
      if (!in) {
        std::cerr << "cannot open " << opt.file << "\n";
        return 2;
      }
      req = Json::parse(in);
    } else {
      req = Json::parse(std::cin);
    }
  } catch (const Json::exception& e) {
    Json resp;
    resp["status"] = "error";
    resp["result"] = {{"code", "malformed"}, {"message", e.what()}};
    resp["diagnostics"] = Json::array();
    std::cout << resp.dump(2) << "\n";
    return 2;
  }

  Json resp;
  resp["diagnostics"] = Json::array();
  try {
    resp["result"] = dispatch(req, opt);
    resp["status"] = "ok";
    std::cout << resp.dump(2) << "\n";
    return 0;
  } catch (const Json::exception& e) {
    resp["status"] = "error";
    resp["result"] = {{"code", "malformed"}, {"message", e.what()}};
    std::cout << resp.dump(2) << "\n";
    return 2;
  } catch (const birat::Error& e) {
    resp["status"] = "error";
    resp["result"] = {{"code", "domain_error"}, {"message", e.what()}};
    std::cout << resp.dump(2) << "\n";
    return 1;
  }
}
