#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ks/fcase.hpp"
#include "ks/prolongation.hpp"

namespace ks::gen {

VField T();
VField R();   // y d/dx - x d/dy
VField Xt();  // d/dx - 2y d/dt
VField Yt();  // d/dy + 2x d/dt
VField Z1();  // x d/dx + y d/dy + 2t d/dt
VField Z2();  // u d/du
VField Z3();  // Z1 - 2 d/du
// Dilation x d/dx + y d/dy + 2t d/dt + 2/(1-p) u d/du for rational p != 1.
VField Z(const Rat& p);
// (1-p) times the dilation, polynomial in the symbol p.
VField Z_symbolic();
VField V1();
VField V2();
VField V3();
// beta(x,y,t) d/du
VField W(const Poly& beta);

// Looks up "T", "R", "Xt", "Yt", "Z1", "Z2", "Z3", "V1", "V2", "V3",
// "Z:<rat>" or "Z:p". Throws std::invalid_argument for unknown names.
VField named(const std::string& name);

using Family = std::vector<std::pair<std::string, VField>>;

// Expected generators for fc, translations and rotation
// first. For Const the zero-case generators are transported by the shift
// u = v - c x^2 / 2. The W-type fields are not included.
Family known_family(const FCase& fc);

// Conjugates S, written in the coordinate v = u - s x^2, back to u.
VField shift_transport(const VField& S, const Rat& s);

}  // namespace ks::gen
