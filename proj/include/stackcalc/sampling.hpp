/*
 * sampling.hpp
 * ------------
 * Seeded, platform-independent sample generators for the property suites:
 * uniform integer coefficients in [-3, 3] over the degree <= 3 monomial
 * basis.  Multiplicative data is sampled as coboundaries plus integer
 * combinations of each example's known multiplicative seeds.
 */
#pragma once

#include "stackcalc/gallery.hpp"

namespace stackcalc {

class SampleRng {
public:
    explicit SampleRng(std::uint64_t seed) : state_(seed + 0x9e3779b97f4a7c15ULL) {}

    std::uint64_t next()
    {
        // splitmix64: identical output on every platform
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    long small_int() { return long(next() % 7) - 3; }  // uniform in [-3, 3]
    Scalar coeff() { return Scalar(small_int()); }

private:
    std::uint64_t state_;
};

inline constexpr int kSampleDegree = 3;

inline ChartFunction sample_function(const ChartPtr& chart, SampleRng& rng,
                                     int degree = kSampleDegree)
{
    ChartFunction f(chart);
    for (const auto& m : enumerate_monomials(chart, degree)) f.add_term(m, rng.coeff());
    return f;
}

inline VectorField sample_field(const ChartPtr& chart, SampleRng& rng,
                                int degree = kSampleDegree)
{
    VectorField v(chart);
    for (auto& c : v.affine_coeffs()) c = sample_function(chart, rng, degree);
    for (auto& c : v.angular_coeffs()) c = sample_function(chart, rng, degree);
    return v;
}

inline AlgebroidSection sample_section(const AlgebroidPresentation& a, SampleRng& rng,
                                       int degree = kSampleDegree)
{
    AlgebroidSection s = a.zero_section();
    for (auto& c : s.coeffs) c = sample_function(a.base, rng, degree);
    return s;
}

inline IMFunction sample_im_candidate(const AlgebroidPresentation& a, SampleRng& rng,
                                      int degree = kSampleDegree)
{
    IMFunction w;
    for (std::size_t k = 0; k < a.rank(); ++k)
        w.values.push_back(sample_function(a.base, rng, degree));
    return w;
}

// delta(random f) plus an integer combination of the known multiplicative
// functions; multiplicative by construction.
inline ArrowFunction sample_mult_function(const GalleryExample& ex, SampleRng& rng)
{
    ArrowFunction F = ex.lg.delta(sample_function(ex.lg.base(), rng));
    for (const auto& known : ex.known_mult_functions) {
        Scalar c = rng.coeff();
        F += c * known;
    }
    return F;
}

// partial(random section) plus an integer combination of the known
// multiplicative fields.
inline MultVectorField sample_mult_field(const GalleryExample& ex, SampleRng& rng)
{
    MultVectorField X = ex.lg.partial(sample_section(ex.lg.algebroid(), rng));
    for (const auto& known : ex.known_mult_fields) {
        long c = rng.small_int();
        MultVectorField scaled = known;
        ChartFunction base_scale = ChartFunction::constant(ex.lg.base(), Scalar(c));
        scaled.base = base_scale * known.base;
        for (std::size_t i = 0; i < scaled.arrows.size(); ++i)
            scaled.arrows[i] =
                ChartFunction::constant(known.arrows[i].chart(), Scalar(c)) * known.arrows[i];
        X += scaled;
    }
    return X;
}

// integer combination of 1 and the known invariant functions (and their
// pairwise products, which stay invariant).
inline ChartFunction sample_invariant(const GalleryExample& ex, SampleRng& rng)
{
    ChartFunction f = ChartFunction::constant(ex.lg.base(), rng.coeff());
    for (const auto& g : ex.known_invariants) {
        Scalar c = rng.coeff();
        f += c * g;
    }
    if (ex.known_invariants.size() >= 2) {
        Scalar c = rng.coeff();
        f += c * (ex.known_invariants[0] * ex.known_invariants[1]);
    }
    return f;
}

inline GradedFunElement sample_fun_element(const GalleryExample& ex, SampleRng& rng)
{
    return {sample_function(ex.lg.base(), rng), sample_mult_function(ex, rng)};
}

inline GradedVFElement sample_vf_element(const GalleryExample& ex, SampleRng& rng)
{
    return {sample_section(ex.lg.algebroid(), rng), sample_mult_field(ex, rng)};
}

}  // namespace stackcalc
