#pragma once

// Shared test presentations.

#include <string>
#include <vector>

#include "gdeform/algebra/tower.hpp"
#include "gdeform/casestudy/models.hpp"

namespace fixtures {

using namespace gdeform;
using namespace gdeform::models;

inline Presentation free_on(std::vector<std::string> names, std::size_t cutoff = 5)
{
    auto g = FiniteGroup::enumerate({}, names.size());
    return Presentation(Representation::natural(g), std::move(names), cutoff);
}

inline Presentation commutative(std::vector<std::string> names, std::size_t cutoff = 5)
{
    Presentation p = free_on(names, cutoff);
    add_commutators(p, p.dim());
    return p;
}

/// The representation S spanned by y_1..y_n in the y/v coordinates.
inline Representation snp1_standard(const Presentation& p)
{
    const std::size_t n = p.dim() - 1;
    std::vector<CMatrix> images;
    for (const auto& g : p.space().generator_images()) {
        CMatrix s(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) s(i, j) = g(i, j);
        images.push_back(s);
    }
    return Representation::from_matrices(p.space().group(), images, n, "S");
}

}  // namespace fixtures
