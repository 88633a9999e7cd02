/*
 * smooth_map.hpp
 * --------------
 * Maps between charts, given per target coordinate as substitution data:
 * a ChartFunction on the source for each affine target coordinate, and a
 * (cos, sin) pair for each circular target coordinate (with p^2 + q^2 = 1
 * as a ring identity).  Pullback is the induced ring homomorphism.
 */
#pragma once

#include "stackcalc/chart.hpp"

namespace stackcalc {

class SmoothMap {
public:
    SmoothMap() = default;

    SmoothMap(ChartPtr source, ChartPtr target,
              std::vector<ChartFunction> affine_images,
              std::vector<std::pair<ChartFunction, ChartFunction>> circular_images)
        : source_(std::move(source)),
          target_(std::move(target)),
          affine_images_(std::move(affine_images)),
          circular_images_(std::move(circular_images))
    {
        if (affine_images_.size() != target_->n_affine() ||
            circular_images_.size() != target_->n_circular())
            throw std::invalid_argument("SmoothMap: wrong number of coordinate images");
        for (const auto& f : affine_images_)
            if (!same_chart(f.chart(), source_))
                throw std::invalid_argument("SmoothMap: image not on source chart");
        for (const auto& [p, q] : circular_images_) {
            if (!same_chart(p.chart(), source_) || !same_chart(q.chart(), source_))
                throw std::invalid_argument("SmoothMap: image not on source chart");
            ChartFunction rel = p * p + q * q - ChartFunction::one(source_);
            if (!rel.is_zero())
                throw std::invalid_argument(
                    "SmoothMap: circular image violates p^2+q^2=1: " + rel.str());
        }
    }

    static SmoothMap identity(const ChartPtr& chart)
    {
        std::vector<ChartFunction> aff;
        for (std::size_t j = 0; j < chart->n_affine(); ++j)
            aff.push_back(ChartFunction::generator(chart, j));
        std::vector<std::pair<ChartFunction, ChartFunction>> circ;
        for (std::size_t i = 0; i < chart->n_circular(); ++i)
            circ.emplace_back(ChartFunction::generator(chart, chart->cos_index(i)),
                              ChartFunction::generator(chart, chart->sin_index(i)));
        return SmoothMap(chart, chart, std::move(aff), std::move(circ));
    }

    // Builds the map that assigns to each target coordinate the source
    // coordinate of the same kind named by `assignment`.
    static SmoothMap coordinate_map(const ChartPtr& source, const ChartPtr& target,
                                    const std::map<std::string, std::string>& assignment)
    {
        std::vector<ChartFunction> aff;
        for (const auto& name : target->affine()) {
            auto it = assignment.find(name);
            if (it == assignment.end())
                throw std::invalid_argument("coordinate_map: no assignment for " + name);
            aff.push_back(ChartFunction::affine_coord(source, it->second));
        }
        std::vector<std::pair<ChartFunction, ChartFunction>> circ;
        for (const auto& name : target->circular()) {
            auto it = assignment.find(name);
            if (it == assignment.end())
                throw std::invalid_argument("coordinate_map: no assignment for " + name);
            circ.emplace_back(ChartFunction::cosine(source, it->second),
                              ChartFunction::sine(source, it->second));
        }
        return SmoothMap(source, target, std::move(aff), std::move(circ));
    }

    const ChartPtr& source() const { return source_; }
    const ChartPtr& target() const { return target_; }
    const ChartFunction& affine_image(std::size_t j) const { return affine_images_[j]; }
    const std::pair<ChartFunction, ChartFunction>& circular_image(std::size_t i) const
    {
        return circular_images_[i];
    }

    // Image of target generator g as a function on the source.
    ChartFunction generator_image(std::size_t g) const
    {
        if (g < target_->n_affine()) return affine_images_[g];
        std::size_t i = (g - target_->n_affine()) / 2;
        return (g - target_->n_affine()) % 2 == 0 ? circular_images_[i].first
                                                  : circular_images_[i].second;
    }

    ChartFunction pullback(const ChartFunction& f) const
    {
        if (!same_chart(f.chart(), target_))
            throw std::invalid_argument("SmoothMap::pullback: chart mismatch");
        std::vector<ChartFunction> images;
        images.reserve(target_->n_generators());
        for (std::size_t g = 0; g < target_->n_generators(); ++g)
            images.push_back(generator_image(g));
        return f.substitute(source_, images);
    }

    // Composition this ∘ inner (inner first).
    SmoothMap after(const SmoothMap& inner) const
    {
        if (!same_chart(inner.target_, source_))
            throw std::invalid_argument("SmoothMap::after: chart mismatch");
        std::vector<ChartFunction> aff;
        for (const auto& f : affine_images_) aff.push_back(inner.pullback(f));
        std::vector<std::pair<ChartFunction, ChartFunction>> circ;
        for (const auto& [p, q] : circular_images_)
            circ.emplace_back(inner.pullback(p), inner.pullback(q));
        return SmoothMap(inner.source_, target_, std::move(aff), std::move(circ));
    }

    bool operator==(const SmoothMap& o) const
    {
        return same_chart(source_, o.source_) && same_chart(target_, o.target_) &&
               affine_images_ == o.affine_images_ && circular_images_ == o.circular_images_;
    }
    bool operator!=(const SmoothMap& o) const { return !(*this == o); }

    // First target coordinate (by name) on which the two maps differ,
    // together with the nonzero difference; nullopt if the maps are equal.
    static std::optional<std::pair<std::string, ChartFunction>>
    first_difference(const SmoothMap& a, const SmoothMap& b)
    {
        if (!same_chart(a.source_, b.source_) || !same_chart(a.target_, b.target_))
            throw std::invalid_argument("SmoothMap::first_difference: chart mismatch");
        for (std::size_t j = 0; j < a.target_->n_affine(); ++j) {
            ChartFunction d = a.affine_images_[j] - b.affine_images_[j];
            if (!d.is_zero()) return std::make_pair(a.target_->affine()[j], d);
        }
        for (std::size_t i = 0; i < a.target_->n_circular(); ++i) {
            ChartFunction dc = a.circular_images_[i].first - b.circular_images_[i].first;
            if (!dc.is_zero())
                return std::make_pair("cos_" + a.target_->circular()[i], dc);
            ChartFunction ds = a.circular_images_[i].second - b.circular_images_[i].second;
            if (!ds.is_zero())
                return std::make_pair("sin_" + a.target_->circular()[i], ds);
        }
        return std::nullopt;
    }

private:
    ChartPtr source_, target_;
    std::vector<ChartFunction> affine_images_;
    std::vector<std::pair<ChartFunction, ChartFunction>> circular_images_;
};

}  // namespace stackcalc
