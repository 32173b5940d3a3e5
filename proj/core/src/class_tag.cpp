#include "sptk/class_tag.hpp"

#include <sstream>
#include <stdexcept>

#include "part_shape.hpp"

namespace sptk {

namespace {

ClassTag make(ClassKind kind, std::optional<int> k, long long n) {
    if (k && *k < 1)
        throw std::invalid_argument("ClassTag: k must be >= 1");
    return ClassTag{kind, k, n};
}

const char* kind_name(ClassKind kind) {
    switch (kind) {
    case ClassKind::SPTKD:
        return "SPTKD";
    case ClassKind::SPTKDO:
        return "SPTKDO";
    case ClassKind::B0:
        return "B0";
    case ClassKind::B1:
        return "B1";
    case ClassKind::PD:
        return "PD";
    case ClassKind::PDE:
        return "PDE";
    case ClassKind::PDO:
        return "PDO";
    }
    return "?";
}

}  // namespace

ClassTag ClassTag::spt_d(int k, long long n) { return make(ClassKind::SPTKD, k, n); }
ClassTag ClassTag::spt_do(int k, long long n) { return make(ClassKind::SPTKDO, k, n); }
ClassTag ClassTag::b0(int k, long long n) { return make(ClassKind::B0, k, n); }
ClassTag ClassTag::b1(int k, long long n) { return make(ClassKind::B1, k, n); }
ClassTag ClassTag::pd(long long n) { return make(ClassKind::PD, std::nullopt, n); }
ClassTag ClassTag::pde(long long n) { return make(ClassKind::PDE, std::nullopt, n); }
ClassTag ClassTag::pdo(long long n) { return make(ClassKind::PDO, std::nullopt, n); }

std::string to_string(const ClassTag& tag) {
    std::ostringstream out;
    out << kind_name(tag.kind) << '(';
    if (tag.k)
        out << *tag.k << ", ";
    out << tag.weight << ')';
    return out.str();
}

bool classify(std::span<const int> p, const ClassTag& tag) {
    if (detail::span_weight(p) != tag.weight)
        return false;
    switch (tag.kind) {
    case ClassKind::PD:
        return detail::strictly_decreasing(p);
    case ClassKind::PDE:
        return detail::strictly_decreasing(p) && detail::all_parity(p, 0);
    case ClassKind::PDO:
        return detail::strictly_decreasing(p) && detail::all_parity(p, 1);
    default:
        break;
    }
    if (p.empty())
        return false;
    if (!tag.k)
        throw std::invalid_argument("classify: tag " + std::string(kind_name(tag.kind)) +
                                    " requires k");
    const auto st = stats(p);
    if (st.smallest_mult != *tag.k)
        return false;
    const auto above = p.first(static_cast<std::size_t>(st.num_greater));
    if (!detail::strictly_decreasing(above))
        return false;
    if (tag.kind == ClassKind::SPTKD)
        return true;
    if (!detail::all_parity(above, (st.smallest & 1) ^ 1))
        return false;
    switch (tag.kind) {
    case ClassKind::SPTKDO:
        return true;
    case ClassKind::B0:
        return st.num_greater % 2 == 0;
    case ClassKind::B1:
        return st.num_greater % 2 == 1;
    default:
        return false;
    }
}

bool classify(const Partition& p, const ClassTag& tag) {
    return classify(p.span(), tag);
}

}  // namespace sptk
