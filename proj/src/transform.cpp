#include "aclab/transform.hpp"

#include <algorithm>
#include <stdexcept>

namespace aclab {

Transformation::Transformation(std::vector<StateId> images) : images_(std::move(images)) {
    for (StateId q : images_)
        if (q >= images_.size())
            throw std::invalid_argument("transformation image out of range");
}

Transformation Transformation::identity(StateId n) {
    std::vector<StateId> img(n);
    for (StateId q = 0; q < n; ++q) img[q] = q;
    return Transformation(std::move(img));
}

StateId Transformation::rank() const {
    std::vector<bool> seen(images_.size(), false);
    StateId r = 0;
    for (StateId q : images_)
        if (!seen[q]) { seen[q] = true; ++r; }
    return r;
}

bool Transformation::is_identity() const {
    for (StateId q = 0; q < degree(); ++q)
        if (images_[q] != q) return false;
    return true;
}

Transformation Transformation::inverse() const {
    if (!is_permutation()) throw std::invalid_argument("inverse of a non-permutation");
    std::vector<StateId> inv(images_.size());
    for (StateId q = 0; q < degree(); ++q) inv[images_[q]] = q;
    return Transformation(std::move(inv));
}

std::vector<StateId> Transformation::cycle_type() const {
    if (!is_permutation()) throw std::invalid_argument("cycle type of a non-permutation");
    std::vector<bool> seen(images_.size(), false);
    std::vector<StateId> lens;
    for (StateId q = 0; q < degree(); ++q) {
        if (seen[q]) continue;
        StateId len = 0, p = q;
        while (!seen[p]) { seen[p] = true; p = images_[p]; ++len; }
        lens.push_back(len);
    }
    std::sort(lens.begin(), lens.end());
    return lens;
}

Transformation compose(const Transformation& s, const Transformation& t) {
    if (s.degree() != t.degree())
        throw std::invalid_argument("compose: degree mismatch");
    std::vector<StateId> img(s.degree());
    for (StateId q = 0; q < s.degree(); ++q) img[q] = t[s[q]];
    return Transformation(std::move(img));
}

Transformation conjugate(const Transformation& r, const Transformation& s) {
    return compose(compose(r, s), r.inverse());
}

std::size_t TransformationHash::operator()(const Transformation& t) const {
    std::size_t h = 0x9e3779b97f4a7c15ull ^ t.degree();
    for (StateId q : t.images()) {
        h ^= q + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
}

TransformSpec& TransformSpec::cycle(std::initializer_list<StateId> states) {
    return cycle(std::vector<StateId>(states));
}

TransformSpec& TransformSpec::cycle(std::vector<StateId> states) {
    TransformPart p;
    p.kind = TransformPart::Kind::Cycle;
    p.cycle = std::move(states);
    parts.push_back(std::move(p));
    return *this;
}

TransformSpec& TransformSpec::collapse(std::vector<StateId> from, StateId to) {
    TransformPart p;
    p.kind = TransformPart::Kind::Collapse;
    p.collapse_from = std::move(from);
    p.collapse_to = to;
    parts.push_back(std::move(p));
    return *this;
}

TransformSpec& TransformSpec::shift_up(std::int64_t lo, std::int64_t hi, bool mod) {
    TransformPart p;
    p.kind = TransformPart::Kind::Shift;
    p.shift_lo = lo;
    p.shift_hi = hi;
    p.shift_delta = 1;
    p.shift_mod = mod;
    parts.push_back(std::move(p));
    return *this;
}

TransformSpec& TransformSpec::shift_down(std::int64_t lo, std::int64_t hi, bool mod) {
    TransformPart p;
    p.kind = TransformPart::Kind::Shift;
    p.shift_lo = lo;
    p.shift_hi = hi;
    p.shift_delta = -1;
    p.shift_mod = mod;
    parts.push_back(std::move(p));
    return *this;
}

Transformation compile(const TransformSpec& spec, StateId n) {
    std::vector<StateId> img(n);
    for (StateId q = 0; q < n; ++q) img[q] = q;
    std::vector<bool> touched(n, false);

    auto claim = [&](StateId q) {
        if (q >= n) throw std::invalid_argument("compile: state out of range");
        if (touched[q]) throw std::invalid_argument("compile: overlapping parts");
        touched[q] = true;
    };

    for (const TransformPart& part : spec.parts) {
        switch (part.kind) {
        case TransformPart::Kind::Cycle: {
            std::vector<bool> in_cycle(n, false);
            for (StateId q : part.cycle) {
                if (q >= n) throw std::invalid_argument("compile: state out of range");
                if (in_cycle[q]) throw std::invalid_argument("compile: repeated state in cycle");
                in_cycle[q] = true;
            }
            // a length-1 "cycle" is the identity on that point
            for (std::size_t i = 0; i < part.cycle.size(); ++i) {
                StateId q = part.cycle[i];
                claim(q);
                img[q] = part.cycle[(i + 1) % part.cycle.size()];
            }
            break;
        }
        case TransformPart::Kind::Collapse:
            if (part.collapse_to >= n)
                throw std::invalid_argument("compile: state out of range");
            for (StateId q : part.collapse_from) {
                claim(q);
                img[q] = part.collapse_to;
            }
            break;
        case TransformPart::Kind::Shift:
            for (std::int64_t q = part.shift_lo; q <= part.shift_hi; ++q) {
                if (q < 0 || q >= n) throw std::invalid_argument("compile: state out of range");
                std::int64_t to = q + part.shift_delta;
                if (part.shift_mod)
                    to = (to % n + n) % n;
                else if (to < 0 || to >= n)
                    throw std::invalid_argument("compile: shift image out of range");
                claim(static_cast<StateId>(q));
                img[q] = static_cast<StateId>(to);
            }
            break;
        }
    }
    return Transformation(std::move(img));
}

} // namespace aclab
