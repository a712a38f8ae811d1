#pragma once

// Flat storage for all trainable parameters plus a layout that maps every
// offset back to (layer, parameter kind, shape) for diagnostics.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace pikan::ad {

enum class ParamKind {
    spline_coeff,
    base_weight,
    spline_weight,
    wavelet_weight,
    wavelet_shift,
    wavelet_scale,
};

inline const char* param_kind_name(ParamKind k) {
    switch (k) {
        case ParamKind::spline_coeff: return "spline_coeff";
        case ParamKind::base_weight: return "base_weight";
        case ParamKind::spline_weight: return "spline_weight";
        case ParamKind::wavelet_weight: return "wavelet_weight";
        case ParamKind::wavelet_shift: return "wavelet_shift";
        case ParamKind::wavelet_scale: return "wavelet_scale";
    }
    return "?";
}

struct ParamBlockDesc {
    int layer = 0;
    ParamKind kind = ParamKind::spline_coeff;
    int rows = 0;   // out_dim
    int cols = 0;   // in_dim
    int depth = 1;  // per-edge count (basis size for spline coeffs)
    std::size_t offset = 0;
    std::size_t count = 0;
};

struct ParameterBlock {
    std::vector<double> values;
    std::vector<double> grads;
    std::vector<ParamBlockDesc> layout;

    std::size_t size() const { return values.size(); }

    void zero_grads() { std::fill(grads.begin(), grads.end(), 0.0); }

    // Layout must tile [0, size) exactly, in order, no gaps or overlaps.
    void validate() const {
        if (values.size() != grads.size()) throw std::logic_error("parameter/gradient size mismatch");
        std::size_t expect = 0;
        for (const auto& b : layout) {
            if (b.offset != expect) throw std::logic_error("parameter layout has a gap or overlap");
            expect += b.count;
        }
        if (expect != values.size()) throw std::logic_error("parameter layout does not cover the flat array");
    }

    const ParamBlockDesc& block_of(std::size_t index) const {
        for (const auto& b : layout)
            if (index >= b.offset && index < b.offset + b.count) return b;
        throw std::out_of_range("parameter index outside layout");
    }

    std::string describe(std::size_t index) const {
        const ParamBlockDesc& b = block_of(index);
        return "layer " + std::to_string(b.layer) + " " + param_kind_name(b.kind) +
               " [" + std::to_string(index - b.offset) + "/" + std::to_string(b.count) + "]";
    }
};

}  // namespace pikan::ad
