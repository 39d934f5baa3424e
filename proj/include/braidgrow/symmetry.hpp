#pragma once

#include <utility>
#include <vector>

#include "braidgrow/braid_template.hpp"
#include "braidgrow/word.hpp"

namespace braidgrow {

// One element of the template symmetry group G_S.  Artin elements combine
// inv, theta and the Garside flip Phi; dual elements combine inv with a
// power of the rotation phi.  For n = 2 both groups collapse to {id, inv}.
struct SymmetryElement {
    Gens kind = Gens::Artin;
    bool inv = false;
    bool theta = false; // Artin only
    bool flip = false;  // Phi, Artin only
    int rot = 0;        // phi exponent, dual only

    bool is_identity() const { return !inv && !theta && !flip && rot == 0; }
    bool operator==(const SymmetryElement&) const = default;
};

// Fixed enumeration (identity first); 8 elements for Artin n >= 3,
// 2n for dual, 2 for n = 2.
std::vector<SymmetryElement> symmetry_group(const Alphabet& alpha);

SymmetryElement symmetry_inverse(const SymmetryElement& g, int n);

// Word image: phi^rot, then theta, then Phi letterwise, then inv as
// reversal plus letterwise inversion.  Rejects maps foreign to the word's
// alphabet kind.
Word map_word(const SymmetryElement& g, const Word& w);

// Template image from the closed forms, never through word conjugation.
Template map_template(const SymmetryElement& g, const Template& t);

// Orbit members, duplicates merged, sorted by the template order.
std::vector<Template> orbit(const Template& t, const Alphabet& alpha);

std::size_t orbit_size(const Template& t, const Alphabet& alpha);

// Order-minimal orbit member plus the first witness g (in enumeration
// order) with map_template(g, t) == reduced.
std::pair<Template, SymmetryElement> reduce(const Template& t, const Alphabet& alpha);

bool is_reduced(const Template& t, const Alphabet& alpha);

} // namespace braidgrow
