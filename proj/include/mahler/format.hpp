#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "mahler/telescope.hpp"

namespace mahler {

using Json = nlohmann::ordered_json;

Json pfd_json(const PFD &f);
Json cycvec_json(const CycVec &v, const Tree &t);
Json residues_json(const Reduction &r);
Json reduction_json(const Reduction &r, const std::optional<PFD> &certificate);
Json matrix_json(const ResidueMatrix &m);
Json verdict_json(const DependenceVerdict &v, const ResidueMatrix &m);

std::string reduction_text(const Reduction &r, const std::optional<PFD> &certificate);
std::string verdict_text(const DependenceVerdict &v);

} // namespace mahler
