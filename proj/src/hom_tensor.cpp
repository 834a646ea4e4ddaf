#include "croc/hom_tensor.hpp"

#include <algorithm>
#include <numeric>

namespace croc {

TensorLayout::TensorLayout(const Profile& p) : profile_(p)
{
    const auto& lo = p.lower();
    const auto& up = p.upper();
    in_off_.resize(lo.size() * up.size());
    out_off_.resize(lo.size() * up.size());
    int off = 0;
    for (size_t i = 0; i < lo.size(); ++i)
        for (size_t j = 0; j < up.size(); ++j) {
            int c = int(i * up.size() + j);
            in_off_[c] = off;
            off += lo[i];
            out_off_[c] = off;
            off += up[j];
        }
    total_ = off;
}

HomTensor::HomTensor(Profile profile, int dim)
    : profile_(std::move(profile)), dim_(dim), layout_(profile_)
{
    if (dim < 1)
        throw Error("vector space dimension must be positive");
    if (dim > 255)
        throw Error("vector space dimension too large for the leg encoding");
}

void HomTensor::add(const Key& key, const Rational& v)
{
    if (int(key.size()) != layout_.total_legs())
        throw Error("coefficient key length does not match tensor layout");
    for (uint8_t leg : key)
        if (leg >= dim_)
            throw Error("basis index out of range in coefficient key");
    if (v == 0)
        return;
    auto it = coeffs_.find(key);
    if (it == coeffs_.end()) {
        coeffs_.emplace(key, v);
    } else {
        it->second += v;
        if (it->second == 0)
            coeffs_.erase(it);
    }
}

Rational HomTensor::coeff(const Key& key) const
{
    auto it = coeffs_.find(key);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

HomTensor HomTensor::operator+(const HomTensor& o) const
{
    if (profile_ != o.profile_ || dim_ != o.dim_)
        throw Error("tensor shape mismatch in addition");
    HomTensor out = *this;
    for (const auto& [k, v] : o.coeffs_)
        out.add(k, v);
    return out;
}

HomTensor HomTensor::operator-(const HomTensor& o) const
{
    if (profile_ != o.profile_ || dim_ != o.dim_)
        throw Error("tensor shape mismatch in subtraction");
    HomTensor out = *this;
    for (const auto& [k, v] : o.coeffs_)
        out.add(k, -v);
    return out;
}

HomTensor HomTensor::scaled(const Rational& c) const
{
    HomTensor out(profile_, dim_);
    if (c == 0)
        return out;
    for (const auto& [k, v] : coeffs_)
        out.coeffs_.emplace(k, v * c);
    return out;
}

bool HomTensor::operator==(const HomTensor& o) const
{
    return profile_ == o.profile_ && dim_ == o.dim_ && coeffs_ == o.coeffs_;
}

HomTensor identity_element(VectorSpaceSpec space)
{
    HomTensor out(Profile({1}, {1}), space.dim);
    for (int i = 0; i < space.dim; ++i)
        out.add({uint8_t(i), uint8_t(i)}, 1);
    return out;
}

BlockPermutation BlockPermutation::trivial(const Profile& p)
{
    BlockPermutation out;
    for (int m : p.lower()) {
        std::vector<int> id(m);
        std::iota(id.begin(), id.end(), 0);
        out.lowerPerms.push_back(std::move(id));
    }
    for (int n : p.upper()) {
        std::vector<int> id(n);
        std::iota(id.begin(), id.end(), 0);
        out.upperPerms.push_back(std::move(id));
    }
    return out;
}

namespace {

void check_perm(const std::vector<int>& perm, int size)
{
    if (int(perm.size()) != size)
        throw Error("permutation size does not match block size");
    std::vector<bool> seen(size, false);
    for (int v : perm) {
        if (v < 0 || v >= size || seen[v])
            throw Error("not a permutation");
        seen[v] = true;
    }
}

} // namespace

HomTensor act_symmetric(const BlockPermutation& g, const BlockPermutation& h,
                        const HomTensor& x)
{
    const Profile& p = x.profile();
    if (g.lowerPerms.size() != p.lower().size() || g.upperPerms.size() != p.upper().size() ||
        h.lowerPerms.size() != p.lower().size() || h.upperPerms.size() != p.upper().size())
        throw Error("block permutation shape mismatch");
    for (size_t i = 0; i < p.lower().size(); ++i) {
        check_perm(g.lowerPerms[i], p.lower()[i]);
        check_perm(h.lowerPerms[i], p.lower()[i]);
    }
    for (size_t j = 0; j < p.upper().size(); ++j) {
        check_perm(g.upperPerms[j], p.upper()[j]);
        check_perm(h.upperPerms[j], p.upper()[j]);
    }

    const TensorLayout& L = x.layout();
    HomTensor out(p, x.dim());
    for (const auto& [key, v] : x.coeffs()) {
        HomTensor::Key nk(key.size());
        for (size_t i = 0; i < p.lower().size(); ++i)
            for (size_t j = 0; j < p.upper().size(); ++j) {
                int in0 = L.in_off(int(i), int(j));
                int out0 = L.out_off(int(i), int(j));
                // precompose with the input rearrangement of g
                for (int q = 0; q < p.lower()[i]; ++q)
                    nk[in0 + g.lowerPerms[i][q]] = key[in0 + q];
                // postcompose with the output rearrangement of h
                for (int r = 0; r < p.upper()[j]; ++r)
                    nk[out0 + r] = key[out0 + h.upperPerms[j][r]];
            }
        out.add(nk, v);
    }
    return out;
}

namespace {

HomTensor stack(const std::vector<HomTensor>& parts, bool rows)
{
    if (parts.empty())
        throw Error("cannot stack an empty list of tensors");
    int dim = parts[0].dim();
    std::vector<int> sizes;
    int shared = -1;
    for (const HomTensor& t : parts) {
        if (t.dim() != dim)
            throw Error("stacked tensors live over different spaces");
        if (t.profile().lower().size() != 1 || t.profile().upper().size() != 1)
            throw Error("stacking expects single-cell tensors");
        int own = rows ? t.profile().lower()[0] : t.profile().upper()[0];
        int other = rows ? t.profile().upper()[0] : t.profile().lower()[0];
        if (shared < 0)
            shared = other;
        else if (shared != other)
            throw Error("stacked tensors disagree on the shared width");
        sizes.push_back(own);
    }
    Profile p = rows ? Profile(sizes, {shared}) : Profile({shared}, sizes);
    HomTensor out(p, dim);

    // Outer product of the per-cell coefficient maps.
    std::vector<std::pair<HomTensor::Key, Rational>> acc = {{{}, Rational(1)}};
    for (const HomTensor& t : parts) {
        std::vector<std::pair<HomTensor::Key, Rational>> next;
        for (const auto& [prefix, pv] : acc)
            for (const auto& [k, v] : t.coeffs()) {
                HomTensor::Key nk = prefix;
                nk.insert(nk.end(), k.begin(), k.end());
                next.emplace_back(std::move(nk), pv * v);
            }
        acc = std::move(next);
        if (acc.empty())
            break;
    }
    for (auto& [k, v] : acc)
        out.add(k, v);
    return out;
}

} // namespace

HomTensor row_stack(const std::vector<HomTensor>& thetas) { return stack(thetas, true); }
HomTensor col_stack(const std::vector<HomTensor>& psis) { return stack(psis, false); }

HomTensor grid_assemble(const std::vector<std::vector<HomTensor>>& grid)
{
    if (grid.empty() || grid[0].empty())
        throw Error("empty grid");
    std::vector<HomTensor> rows;
    for (const auto& row : grid) {
        if (row.size() != grid[0].size())
            throw Error("ragged grid");
        // A row of cells (m_i -> n_j) assembles to ((m_i);(n_1,...,n_b)).
        rows.push_back(col_stack(row));
    }
    // Now assemble rows; generalize the outer product directly.
    std::vector<int> lower, upper;
    int dim = rows[0].dim();
    for (const auto& r : rows)
        lower.push_back(r.profile().lower()[0]);
    upper = rows[0].profile().upper();
    for (const auto& r : rows)
        if (r.profile().upper() != upper)
            throw Error("grid rows disagree on upper blocks");
    HomTensor out(Profile(lower, upper), dim);
    std::vector<std::pair<HomTensor::Key, Rational>> acc = {{{}, Rational(1)}};
    for (const HomTensor& r : rows) {
        std::vector<std::pair<HomTensor::Key, Rational>> next;
        for (const auto& [prefix, pv] : acc)
            for (const auto& [k, v] : r.coeffs()) {
                HomTensor::Key nk = prefix;
                nk.insert(nk.end(), k.begin(), k.end());
                next.emplace_back(std::move(nk), pv * v);
            }
        acc = std::move(next);
        if (acc.empty())
            break;
    }
    for (auto& [k, v] : acc)
        out.add(k, v);
    return out;
}

HomTensor simple_compose(const std::vector<HomTensor>& thetas,
                         const std::vector<HomTensor>& psis)
{
    if (thetas.empty() || psis.empty())
        throw Error("simple_compose needs nonempty layers");
    const int l1 = int(thetas.size());
    const int l2 = int(psis.size());
    for (const HomTensor& t : thetas)
        if (t.profile().upper() != std::vector<int>{l2})
            throw Error("theta output width must equal the number of psis");
    for (const HomTensor& s : psis)
        if (s.profile().lower() != std::vector<int>{l1})
            throw Error("psi input width must equal the number of thetas");
    return general_compose(row_stack(thetas), col_stack(psis));
}

HomTensor general_compose(const HomTensor& x, const HomTensor& y)
{
    const Profile& px = x.profile();
    const Profile& py = y.profile();
    if (x.dim() != y.dim())
        throw Error("composition over different spaces");
    if (!composable(px, py))
        throw Error("profiles " + px.str() + " and " + py.str() + " do not compose");
    Profile ambient = compose_profile(px, py);
    HomTensor out(ambient, x.dim());
    if (x.is_zero() || y.is_zero())
        return out;

    const int A = int(px.lower().size()); // x rows = y lower points
    const int T = int(py.upper().size()); // y columns = x upper points
    const TensorLayout& LX = x.layout();
    const TensorLayout& LY = y.layout();
    const TensorLayout& LO = out.layout();

    // Global offsets of x's upper blocks inside 0..T-1 and of y's lower
    // blocks inside 0..A-1.
    std::vector<int> xup_off(px.upper().size() + 1, 0);
    for (size_t l = 0; l < px.upper().size(); ++l)
        xup_off[l + 1] = xup_off[l] + px.upper()[l];
    std::vector<int> ylo_off(py.lower().size() + 1, 0);
    for (size_t k = 0; k < py.lower().size(); ++k)
        ylo_off[k + 1] = ylo_off[k] + py.lower()[k];
    // Row i of x belongs to output row block_of_row[i].
    std::vector<int> block_of_row(A);
    for (size_t k = 0; k < py.lower().size(); ++k)
        for (int r = ylo_off[k]; r < ylo_off[k + 1]; ++r)
            block_of_row[r] = int(k);
    std::vector<int> block_of_col(T);
    for (size_t l = 0; l < px.upper().size(); ++l)
        for (int c = xup_off[l]; c < xup_off[l + 1]; ++c)
            block_of_col[c] = int(l);

    // Leg maps: every leg either projects to the A-by-T bundle of
    // intermediate indices (row-major) or lands at an output key position.
    const int W = A * T;
    std::vector<int> x_to_w(LX.total_legs(), -1), x_to_out(LX.total_legs(), -1);
    std::vector<int> y_to_w(LY.total_legs(), -1), y_to_out(LY.total_legs(), -1);

    // Offsets of x's inputs inside output cell (k,l): rows of block k in order.
    for (int i = 0; i < A; ++i) {
        int k = block_of_row[i];
        int before = 0;
        for (int r = ylo_off[k]; r < i; ++r)
            before += px.lower()[r];
        for (size_t l = 0; l < px.upper().size(); ++l) {
            for (int p = 0; p < px.lower()[i]; ++p)
                x_to_out[LX.in_off(i, int(l)) + p] = LO.in_off(k, int(l)) + before + p;
            for (int s = 0; s < px.upper()[l]; ++s)
                x_to_w[LX.out_off(i, int(l)) + s] = i * T + (xup_off[l] + s);
        }
    }
    for (int j = 0; j < T; ++j) {
        int l = block_of_col[j];
        int before = 0;
        for (int c = xup_off[l]; c < j; ++c)
            before += py.upper()[c];
        for (size_t k = 0; k < py.lower().size(); ++k) {
            for (int r = 0; r < py.lower()[k]; ++r)
                y_to_w[LY.in_off(int(k), j) + r] = (ylo_off[k] + r) * T + j;
            for (int s = 0; s < py.upper()[j]; ++s)
                y_to_out[LY.out_off(int(k), j) + s] = LO.out_off(int(k), l) + before + s;
        }
    }

    // Join the two coefficient maps over the intermediate bundle.
    using Stamp = std::vector<std::pair<int, uint8_t>>;
    std::map<HomTensor::Key, std::vector<std::pair<Stamp, Rational>>> by_w;
    for (const auto& [key, v] : x.coeffs()) {
        HomTensor::Key w(W, 0);
        Stamp stamp;
        for (int leg = 0; leg < LX.total_legs(); ++leg) {
            if (x_to_w[leg] >= 0)
                w[x_to_w[leg]] = key[leg];
            else
                stamp.emplace_back(x_to_out[leg], key[leg]);
        }
        by_w[w].emplace_back(std::move(stamp), v);
    }
    for (const auto& [key, v] : y.coeffs()) {
        HomTensor::Key w(W, 0);
        Stamp stamp;
        for (int leg = 0; leg < LY.total_legs(); ++leg) {
            if (y_to_w[leg] >= 0)
                w[y_to_w[leg]] = key[leg];
            else
                stamp.emplace_back(y_to_out[leg], key[leg]);
        }
        auto it = by_w.find(w);
        if (it == by_w.end())
            continue;
        for (const auto& [xstamp, xv] : it->second) {
            HomTensor::Key result(LO.total_legs(), 0);
            for (const auto& [pos, val] : xstamp)
                result[pos] = val;
            for (const auto& [pos, val] : stamp)
                result[pos] = val;
            out.add(result, xv * v);
        }
    }
    return out;
}

} // namespace croc
