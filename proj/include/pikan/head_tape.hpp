#pragma once

// A small reverse-mode tape for the "loss head": residual and condition
// expressions over network output jets at a single collocation point. The
// tape is rebuilt per point (a few dozen nodes) and its buffers are reused,
// so both the loss value and its derivatives with respect to every jet
// component come from one code path.

#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "pikan/jet.hpp"

namespace pikan::ad {

class HeadTape {
  public:
    struct Node {
        double val;
        double da, db;
        int32_t ia, ib;  // parent ids, -1 if absent
    };

    void reset() {
        nodes_.clear();
    }

    int32_t leaf(double v) { return push(v, 0.0, 0.0, -1, -1); }

    double value(int32_t id) const { return nodes_[static_cast<std::size_t>(id)].val; }

    int32_t add(int32_t a, int32_t b) { return push(val(a) + val(b), 1.0, 1.0, a, b); }
    int32_t sub(int32_t a, int32_t b) { return push(val(a) - val(b), 1.0, -1.0, a, b); }
    int32_t mul(int32_t a, int32_t b) { return push(val(a) * val(b), val(b), val(a), a, b); }
    int32_t neg(int32_t a) { return push(-val(a), -1.0, 0.0, a, -1); }
    int32_t scale(int32_t a, double c) { return push(c * val(a), c, 0.0, a, -1); }
    int32_t add_const(int32_t a, double c) { return push(val(a) + c, 1.0, 0.0, a, -1); }
    int32_t square(int32_t a) { return push(val(a) * val(a), 2.0 * val(a), 0.0, a, -1); }
    int32_t sin(int32_t a) { return push(std::sin(val(a)), std::cos(val(a)), 0.0, a, -1); }
    int32_t cos(int32_t a) { return push(std::cos(val(a)), -std::sin(val(a)), 0.0, a, -1); }
    int32_t exp(int32_t a) {
        const double e = std::exp(val(a));
        return push(e, e, 0.0, a, -1);
    }

    // d(root)/d(node) for every node, one reverse sweep.
    void backward(int32_t root) {
        adj_.assign(nodes_.size(), 0.0);
        adj_[static_cast<std::size_t>(root)] = 1.0;
        for (std::size_t i = nodes_.size(); i-- > 0;) {
            const Node& n = nodes_[i];
            const double a = adj_[i];
            if (a == 0.0) continue;
            if (n.ia >= 0) adj_[static_cast<std::size_t>(n.ia)] += n.da * a;
            if (n.ib >= 0) adj_[static_cast<std::size_t>(n.ib)] += n.db * a;
        }
    }

    double adjoint(int32_t id) const { return adj_[static_cast<std::size_t>(id)]; }

    std::size_t size() const { return nodes_.size(); }

  private:
    double val(int32_t id) const { return nodes_[static_cast<std::size_t>(id)].val; }

    int32_t push(double v, double da, double db, int32_t ia, int32_t ib) {
        nodes_.push_back(Node{v, da, db, ia, ib});
        return static_cast<int32_t>(nodes_.size() - 1);
    }

    std::vector<Node> nodes_;
    std::vector<double> adj_;
};

// Expression handle with operator sugar; problem definitions read naturally.
struct HVar {
    HeadTape* tape = nullptr;
    int32_t id = -1;

    double value() const { return tape->value(id); }
};

inline HVar make_leaf(HeadTape& t, double v) { return HVar{&t, t.leaf(v)}; }

inline HVar operator+(HVar a, HVar b) { return {a.tape, a.tape->add(a.id, b.id)}; }
inline HVar operator-(HVar a, HVar b) { return {a.tape, a.tape->sub(a.id, b.id)}; }
inline HVar operator*(HVar a, HVar b) { return {a.tape, a.tape->mul(a.id, b.id)}; }
inline HVar operator-(HVar a) { return {a.tape, a.tape->neg(a.id)}; }
inline HVar operator*(double c, HVar a) { return {a.tape, a.tape->scale(a.id, c)}; }
inline HVar operator*(HVar a, double c) { return {a.tape, a.tape->scale(a.id, c)}; }
inline HVar operator+(HVar a, double c) { return {a.tape, a.tape->add_const(a.id, c)}; }
inline HVar operator+(double c, HVar a) { return {a.tape, a.tape->add_const(a.id, c)}; }
inline HVar operator-(HVar a, double c) { return {a.tape, a.tape->add_const(a.id, -c)}; }
inline HVar operator-(double c, HVar a) { return {a.tape, a.tape->add_const(a.tape->neg(a.id), c)}; }
inline HVar sin(HVar a) { return {a.tape, a.tape->sin(a.id)}; }
inline HVar cos(HVar a) { return {a.tape, a.tape->cos(a.id)}; }
inline HVar exp(HVar a) { return {a.tape, a.tape->exp(a.id)}; }
inline HVar square(HVar a) { return {a.tape, a.tape->square(a.id)}; }

// One network output seen by the loss head: its value and input derivatives
// as tape leaves, so residual expressions can differentiate through them.
struct HeadJet {
    HVar val;
    std::array<HVar, kMaxDim> d1{};
    std::array<HVar, 3> d2{};
    int dim = 1;

    HVar v() const { return val; }
    HVar d(int axis) const { return d1[static_cast<std::size_t>(axis)]; }
    HVar dd(int i, int j) const { return d2[static_cast<std::size_t>(hess_index(i, j))]; }
};

inline HeadJet seed_head_jet(HeadTape& t, const Jet2& j) {
    HeadJet out;
    out.dim = j.dim;
    out.val = make_leaf(t, j.v);
    for (int i = 0; i < j.dim; ++i) out.d1[static_cast<std::size_t>(i)] = make_leaf(t, j.g[static_cast<std::size_t>(i)]);
    for (int i = 0; i < hess_count(j.dim); ++i) out.d2[static_cast<std::size_t>(i)] = make_leaf(t, j.h[static_cast<std::size_t>(i)]);
    return out;
}

// After backward(), collect d(root)/d(jet components) as a jet-shaped triple.
inline Jet2 head_jet_adjoint(const HeadTape& t, const HeadJet& hj) {
    Jet2 a;
    a.dim = hj.dim;
    a.v = t.adjoint(hj.val.id);
    for (int i = 0; i < hj.dim; ++i) a.g[static_cast<std::size_t>(i)] = t.adjoint(hj.d1[static_cast<std::size_t>(i)].id);
    for (int i = 0; i < hess_count(hj.dim); ++i) a.h[static_cast<std::size_t>(i)] = t.adjoint(hj.d2[static_cast<std::size_t>(i)].id);
    return a;
}

}  // namespace pikan::ad
