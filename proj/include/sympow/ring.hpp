#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "sympow/field.hpp"
#include "sympow/monomial.hpp"

namespace sympow {

// R = k[x_1..x_d] with a fixed active monomial order. Immutable after
// construction; Ring is a cheap shared handle, so polynomials can carry
// their ring around. Equality is structural (field, variables, order).
class Ring {
public:
    Ring() = default; // empty handle; only containers/placeholders

    static Ring make(FieldSpec field, std::vector<std::string> vars,
                     MonomialOrder order = {});

    const FieldSpec& field() const { return d_->field; }
    const std::vector<std::string>& vars() const { return d_->vars; }
    const MonomialOrder& order() const { return d_->order; }
    int nvars() const { return static_cast<int>(d_->vars.size()); }
    int var_index(std::string_view name) const; // -1 when absent
    bool valid() const { return d_ != nullptr; }

    // Same variables, different active order.
    Ring with_order(MonomialOrder order) const;
    // [aux..., old vars...] in the given order; the t-trick ring.
    Ring prepended(const std::vector<std::string>& aux, MonomialOrder order) const;
    // Variables [k..d) in the given order; the elimination target ring.
    Ring dropped_front(int k, MonomialOrder order) const;

    bool same(const Ring& o) const;           // structural
    bool same_vars(const Ring& o) const;      // field + variables, order ignored
    int cmp(const Monomial& a, const Monomial& b) const
    {
        return mono_cmp(a, b, nvars(), d_->order);
    }

    std::string str() const; // "QQ[x,y,z]" (order not part of the wire form)

private:
    struct Data {
        FieldSpec field;
        std::vector<std::string> vars;
        MonomialOrder order;
    };
    std::shared_ptr<const Data> d_;
};

} // namespace sympow
