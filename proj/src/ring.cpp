#include "sympow/ring.hpp"

#include <algorithm>
#include <cctype>

namespace sympow {

namespace {

bool valid_var_name(const std::string& s)
{
    if (s.empty())
        return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_')
        return false;
    return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isalnum(c) || c == '_'; });
}

} // namespace

Ring Ring::make(FieldSpec field, std::vector<std::string> vars, MonomialOrder order)
{
    if (!field.rational()) {
        if (field.modulus <= 2 || !is_prime_u64(field.modulus))
            throw DomainError("prime-field modulus must be a prime > 2, got "
                              + std::to_string(field.modulus));
        if (field.modulus >= (1ull << 62))
            throw DomainError("prime-field modulus must fit in 62 bits");
    }
    if (vars.empty())
        throw DomainError("a ring needs at least one variable");
    if (static_cast<int>(vars.size()) > kMaxVars)
        throw DomainError("at most " + std::to_string(kMaxVars) + " variables are supported");
    for (const auto& v : vars)
        if (!valid_var_name(v))
            throw DomainError("invalid variable name '" + v + "'");
    for (std::size_t i = 0; i < vars.size(); ++i)
        for (std::size_t j = i + 1; j < vars.size(); ++j)
            if (vars[i] == vars[j])
                throw DomainError("duplicate variable '" + vars[i] + "'");
    if (order.kind == OrderKind::Elim
        && (order.block <= 0 || order.block >= static_cast<int>(vars.size())))
        throw DomainError("block-elimination block size out of range");

    Ring r;
    r.d_ = std::make_shared<Data>(Data{field, std::move(vars), order});
    return r;
}

int Ring::var_index(std::string_view name) const
{
    for (int i = 0; i < nvars(); ++i)
        if (d_->vars[i] == name)
            return i;
    return -1;
}

Ring Ring::with_order(MonomialOrder order) const
{
    return make(d_->field, d_->vars, order);
}

Ring Ring::prepended(const std::vector<std::string>& aux, MonomialOrder order) const
{
    std::vector<std::string> vs = aux;
    vs.insert(vs.end(), d_->vars.begin(), d_->vars.end());
    return make(d_->field, std::move(vs), order);
}

Ring Ring::dropped_front(int k, MonomialOrder order) const
{
    std::vector<std::string> vs(d_->vars.begin() + k, d_->vars.end());
    return make(d_->field, std::move(vs), order);
}

bool Ring::same(const Ring& o) const
{
    if (d_ == o.d_)
        return true;
    if (!d_ || !o.d_)
        return false;
    return d_->field == o.d_->field && d_->vars == o.d_->vars && d_->order == o.d_->order;
}

bool Ring::same_vars(const Ring& o) const
{
    if (d_ == o.d_)
        return true;
    if (!d_ || !o.d_)
        return false;
    return d_->field == o.d_->field && d_->vars == o.d_->vars;
}

std::string Ring::str() const
{
    std::string s = d_->field.str() + "[";
    for (std::size_t i = 0; i < d_->vars.size(); ++i) {
        if (i)
            s += ",";
        s += d_->vars[i];
    }
    return s + "]";
}

} // namespace sympow
