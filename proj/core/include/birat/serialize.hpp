#pragma once

#include <nlohmann/json.hpp>

#include "birat/blowup.hpp"
#include "birat/domain.hpp"
#include "birat/monomial_pair.hpp"
#include "birat/probes.hpp"

namespace birat {

using Json = nlohmann::json;

Json ring_to_json(const RingPresentation& B);
RingPresentation ring_from_json(const Json& j);

Json pair_to_json(const PairOfRings& p);
PairOfRings pair_from_json(const Json& j);

Json hom_to_json(const PairHom& h);
PairHom hom_from_json(const Json& j);

/// ZERO serializes as null, finite values as integer arrays.
Json value_to_json(const ValueVector& v);

Json valuation_to_json(const Valuation& v);
Valuation valuation_from_json(const Json& j, const RingPresentation& B);

Json domain_to_json(const RationalDomain& d);
RationalDomain domain_from_json(const Json& j);
RationalDomain domain_from_json(const Json& j, const PairOfRings& base);

Json covering_to_json(const Covering& c);
Covering covering_from_json(const Json& j);

Json module_to_json(const ModuleE& e);
ModuleE module_from_json(const Json& j);

Json monomial_pair_to_json(const MonomialPair& mp);
MonomialPair monomial_pair_from_json(const Json& j);

Json corpus_to_json(const PairOfRings& pair, const ProbeCorpus& corpus);
ProbeCorpus corpus_from_json(const Json& j, const PairOfRings& pair);

}  // namespace birat
