#include "gk0/gamma_map.hpp"

#include "gk0/error.hpp"

namespace gk0 {

GammaLinearMap::GammaLinearMap(SimplicialGroup source, SimplicialGroup target, std::vector<GammaVector> columns)
    : source_(std::move(source)), target_(std::move(target)), columns_(std::move(columns)) {
    require_same_group(source_.group(), target_.group());
    if (columns_.size() != source_.rank())
        fail(Errc::ShapeMismatch, std::to_string(columns_.size()) + " columns for a source of rank " +
                                      std::to_string(source_.rank()));
    for (const auto& col : columns_) {
        require_member(target_, col);
        for (Elt d : source_.space()->sub().members())
            if (!(act(d, col) == col))
                fail(Errc::NotEquivariant, "column " + col.str() + " is moved by " + source_.group()->name(d));
    }
}

GammaLinearMap GammaLinearMap::identity(const SimplicialGroup& g) {
    std::vector<GammaVector> cols;
    for (std::size_t i = 0; i < g.rank(); ++i) cols.push_back(GammaVector::basis(g, i));
    return GammaLinearMap(g, g, std::move(cols));
}

GammaLinearMap GammaLinearMap::zero(const SimplicialGroup& source, const SimplicialGroup& target) {
    return GammaLinearMap(source, target, std::vector<GammaVector>(source.rank(), GammaVector(target)));
}

bool is_positive_map(const GammaLinearMap& f) {
    for (const auto& col : f.columns())
        if (!cone_contains(f.target(), col)) return false;
    return true;
}

GammaVector map_apply(const GammaLinearMap& f, const GammaVector& v) {
    require_member(f.source(), v);
    GammaVector out(f.target());
    for (std::size_t i = 0; i < v.rank(); ++i)
        if (!v[i].is_zero()) out += act(v[i].lift(), f.column(i));
    return out;
}

GammaLinearMap map_compose(const GammaLinearMap& g, const GammaLinearMap& f) {
    if (!(f.target() == g.source())) fail(Errc::ShapeMismatch, "maps do not compose");
    std::vector<GammaVector> cols;
    for (const auto& col : f.columns()) cols.push_back(map_apply(g, col));
    return GammaLinearMap(f.source(), g.target(), std::move(cols));
}

IntMatrix flatten(const GammaLinearMap& f) {
    const auto& src = f.source();
    const std::size_t k = src.index();
    IntMatrix m(f.target().flat_dim(), IntRow(src.flat_dim()));
    for (std::size_t i = 0; i < src.rank(); ++i)
        for (std::size_t c = 0; c < k; ++c) {
            IntRow img = act(src.space()->rep(c), f.column(i)).flatten();
            for (std::size_t t = 0; t < img.size(); ++t) m[t][i * k + c] = img[t];
        }
    return m;
}

IntMatrix kernel_lattice(const GammaLinearMap& f) { return integer_kernel(flatten(f), f.source().flat_dim()); }

std::vector<GammaVector> map_kernel(const GammaLinearMap& f) {
    std::vector<GammaVector> out;
    for (const auto& row : kernel_lattice(f)) out.push_back(GammaVector::unflatten(f.source(), row));
    return out;
}

GammaLinearMap append_columns(const GammaLinearMap& f, const std::vector<GammaVector>& extra) {
    SimplicialGroup src(f.source().space(), f.source().rank() + extra.size());
    std::vector<GammaVector> cols = f.columns();
    cols.insert(cols.end(), extra.begin(), extra.end());
    return GammaLinearMap(src, f.target(), std::move(cols));
}

GammaLinearMap first_summand_inclusion(const SimplicialGroup& g, std::size_t extra_rank) {
    SimplicialGroup big(g.space(), g.rank() + extra_rank);
    std::vector<GammaVector> cols;
    for (std::size_t i = 0; i < g.rank(); ++i) cols.push_back(GammaVector::basis(big, i));
    return GammaLinearMap(g, big, std::move(cols));
}

} // namespace gk0
