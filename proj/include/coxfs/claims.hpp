#pragma once

#include "coxfs/coxgroup.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace coxfs {

enum class Status { Pass, Fail, Skipped };
std::string to_string(Status s);

/// Outcome of one check, with enough data in `witness` to see why.
struct Report {
    std::string claim;
    Status status = Status::Pass;
    nlohmann::ordered_json witness;
};

struct ClaimOptions {
    std::size_t max_order = default_max_order();
    /// Cells are computed from Kazhdan-Lusztig polynomials up to this order.
    std::size_t kl_max_order = 1200;
    /// Optional data file for the 74-element family of H4.
    std::string h4_data;
    /// Claims run on up to this many threads; output order does not depend on it.
    int jobs = 1;
};

/// Claim ids in report order:
///   representation, character-table, involution-decomposition, gelfand-model,
///   special-characters, uch-families, fusion-axioms, epsilon, fake-degree-transform,
///   left-cells, kottwitz, weak-kottwitz, cell-intersections, cell-fourier-fixed,
///   h4-big-family
const std::vector<std::string>& claim_ids();

/// The listed claims (all when empty) that apply to the type. Claims that do not apply are
/// left out; claims that apply but cannot run are reported as skipped.
std::vector<Report> verify_claims(const CoxeterType& type, const std::vector<std::string>& claims = {},
                                  const ClaimOptions& opt = {});

/// True when no report failed.
bool all_passed(const std::vector<Report>& reports);

nlohmann::ordered_json to_json(const Report& r);

} // namespace coxfs
