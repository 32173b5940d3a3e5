#include "sptk/bijections.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <stdexcept>

namespace sptk {

namespace {

void validate_rule(const BijectionRule& rule) {
    const int k_min = rule.id == RuleId::THM1A ? 2 : 1;
    if (rule.k < k_min)
        throw std::invalid_argument(std::string(to_string(rule.id)) + " requires k >= " +
                                    std::to_string(k_min));
}

[[noreturn]] void domain_violation(const BijectionRule& rule, const Partition& p,
                                   const std::string& expected) {
    throw std::domain_error("forward(" + std::string(to_string(rule.id)) +
                            ", k=" + std::to_string(rule.k) + "): " + p.str() +
                            " is not a member of " + expected);
}

void require_member(const BijectionRule& rule, const Partition& p, const ClassTag& tag) {
    if (!classify(p, tag))
        domain_violation(rule, p, to_string(tag));
}

// Subtracts 2 from `minus_two` copies and 1 from `minus_one` copies of the
// smallest part, dropping parts that reach zero.
Partition edit_smallest(const Partition& p, int minus_two, int minus_one) {
    const auto st = stats(p);
    assert(minus_two + minus_one <= st.smallest_mult);
    assert(minus_two == 0 || st.smallest >= 2);
    std::vector<int> v = p.parts();
    std::size_t i = v.size();
    for (int j = 0; j < minus_two; ++j)
        v[--i] -= 2;
    for (int j = 0; j < minus_one; ++j)
        v[--i] -= 1;
    v.erase(std::remove(v.begin(), v.end(), 0), v.end());
    return Partition(std::move(v));
}

// Adds `amount` to every copy of the smallest part.
Partition bump_all_smallest(const Partition& p, int amount) {
    const auto st = stats(p);
    std::vector<int> v = p.parts();
    for (std::size_t i = v.size() - static_cast<std::size_t>(st.smallest_mult); i < v.size(); ++i)
        v[i] += amount;
    return Partition(std::move(v));
}

// Adds 2 to every copy of the smallest part and 1 to the (single) second
// smallest part.
Partition bump_smallest_and_second(const Partition& p) {
    const auto st = stats(p);
    assert(st.second_smallest.has_value());
    std::vector<int> v = p.parts();
    for (std::size_t i = v.size() - static_cast<std::size_t>(st.smallest_mult); i < v.size(); ++i)
        v[i] += 2;
    v[v.size() - static_cast<std::size_t>(st.smallest_mult) - 1] += 1;
    return Partition(std::move(v));
}

Partition append_parts(const Partition& p, int value, int count) {
    std::vector<int> v = p.parts();
    v.insert(v.end(), static_cast<std::size_t>(count), value);
    return Partition(std::move(v));
}

// For a distinct-odd-part partition with smallest part 1: turn the 1 into
// a 2, then adjoin `twos` new parts equal to 2.
Partition bump_single_smallest_and_append_twos(const Partition& p, int twos) {
    std::vector<int> v = p.parts();
    v.back() += 1;
    v.insert(v.end(), static_cast<std::size_t>(twos), 2);
    return Partition(std::move(v));
}

}  // namespace

MappedPartition::MappedPartition(Partition image_in, ClassTag tag_in)
    : image(std::move(image_in)), tag(tag_in) {
    if (!classify(image, tag))
        throw std::domain_error("MappedPartition: " + image.str() +
                                " is not a member of claimed class " + to_string(tag));
}

MappedPartition forward(const BijectionRule& rule, const Partition& lam) {
    validate_rule(rule);
    const int k = rule.k;
    const long long w = lam.weight();
    if (lam.empty())
        domain_violation(rule, lam, "any smallest-part class (domain excludes the empty partition)");
    const auto st = stats(lam);
    const int s = st.smallest;

    switch (rule.id) {
    case RuleId::THM1A: {
        if (classify(lam, ClassTag::spt_d(k - 1, w))) {
            // component SPTKD(k-1, n): take one 1 off each of the k-1 copies
            // of the smallest part. s = 1 empties them; s > 1 keeps
            // multiplicity k-1 at value s-1.
            auto tag = s == 1 ? ClassTag::pd(w - k + 1) : ClassTag::spt_d(k - 1, w - k + 1);
            return {edit_smallest(lam, 0, k - 1), tag};
        }
        if (classify(lam, ClassTag::spt_d(k, w))) {
            // component SPTKD(k, n): take one 1 off k-1 of the k copies,
            // leaving one copy in place.
            auto tag = s == 1 ? ClassTag::pd(w - k + 1) : ClassTag::spt_d(k - 1, w - k + 1);
            return {edit_smallest(lam, 0, k - 1), tag};
        }
        domain_violation(rule, lam,
                         to_string(ClassTag::spt_d(k, w)) + " u " + to_string(ClassTag::spt_d(k - 1, w)));
    }

    case RuleId::L1: {
        if (w % 2 != 0) {  // component B0(k+1, 2t+1)
            require_member(rule, lam, ClassTag::b0(k + 1, w));
            if (s == 1)  // drop the k+1 ones; image: distinct even parts, even length
                return {edit_smallest(lam, 0, k + 1), ClassTag::pde(w - k - 1)};
            // 2 off the first k copies, 1 off the last; s(mu)=s-2, ss(mu)=s-1
            return {edit_smallest(lam, k, 1), ClassTag::b1(k, w - 2 * k - 1)};
        }
        // component B1(k, 2t)
        require_member(rule, lam, ClassTag::b1(k, w));
        if (s == 1)  // drop the k ones; image: distinct even parts, odd length
            return {edit_smallest(lam, 0, k), ClassTag::pde(w - k)};
        // 2 off each of the k copies; s(mu)=s-2, ss(mu)>s
        return {edit_smallest(lam, k, 0), ClassTag::b1(k, w - 2 * k)};
    }

    case RuleId::L2: {
        if (w % 2 == 0) {  // component B0(k+1, 2t)
            require_member(rule, lam, ClassTag::b0(k + 1, w));
            if (s == 1)
                return {edit_smallest(lam, 0, k + 1), ClassTag::pde(w - k - 1)};
            if (s == 2)  // the k edited copies vanish, the 1 survives
                return {edit_smallest(lam, k, 1), ClassTag::pdo(w - 2 * k - 1)};
            return {edit_smallest(lam, k, 1), ClassTag::b1(k, w - 2 * k - 1)};
        }
        // component B1(k, 2t-1)
        require_member(rule, lam, ClassTag::b1(k, w));
        if (s == 1)
            return {edit_smallest(lam, 0, k), ClassTag::pde(w - k)};
        if (s == 2)  // all k copies vanish; image: distinct odd parts > 2
            return {edit_smallest(lam, k, 0), ClassTag::pdo(w - 2 * k)};
        return {edit_smallest(lam, k, 0), ClassTag::b1(k, w - 2 * k)};
    }

    case RuleId::L3: {
        if (w % 2 != 0) {  // component B0(k, 2t-1)
            require_member(rule, lam, ClassTag::b0(k, w));
            if (s == 1)
                return {edit_smallest(lam, 0, k), ClassTag::pde(w - k)};
            return {edit_smallest(lam, k, 0), ClassTag::b0(k, w - 2 * k)};
        }
        // component B1(k+1, 2t)
        require_member(rule, lam, ClassTag::b1(k + 1, w));
        if (s == 1)
            return {edit_smallest(lam, 0, k + 1), ClassTag::pde(w - k - 1)};
        return {edit_smallest(lam, k, 1), ClassTag::b0(k, w - 2 * k - 1)};
    }

    case RuleId::L4: {
        if (w % 2 == 0) {  // component B0(k, 2t)
            require_member(rule, lam, ClassTag::b0(k, w));
            if (s == 1)
                return {edit_smallest(lam, 0, k), ClassTag::pde(w - k)};
            if (s == 2)
                return {edit_smallest(lam, k, 0), ClassTag::pdo(w - 2 * k)};
            return {edit_smallest(lam, k, 0), ClassTag::b0(k, w - 2 * k)};
        }
        // component B1(k+1, 2t+1)
        require_member(rule, lam, ClassTag::b1(k + 1, w));
        if (s == 1)
            return {edit_smallest(lam, 0, k + 1), ClassTag::pde(w - k - 1)};
        if (s == 2)  // k copies vanish, the leftover 1 makes s(mu)=1
            return {edit_smallest(lam, k, 1), ClassTag::pdo(w - 2 * k - 1)};
        return {edit_smallest(lam, k, 1), ClassTag::b0(k, w - 2 * k - 1)};
    }
    }
    throw std::invalid_argument("forward: bad rule id");
}

namespace {

[[noreturn]] void bad_inverse_tag(const BijectionRule& rule, const ClassTag& tag) {
    throw std::domain_error("inverse(" + std::string(to_string(rule.id)) +
                            ", k=" + std::to_string(rule.k) + "): tag " + to_string(tag) +
                            " is not a codomain component of this rule");
}

void require_tagged_member(const BijectionRule& rule, const Partition& mu, const ClassTag& tag) {
    if (!classify(mu, tag))
        throw std::domain_error("inverse(" + std::string(to_string(rule.id)) +
                                ", k=" + std::to_string(rule.k) + "): " + mu.str() +
                                " is not a member of " + to_string(tag));
}

Partition finish_inverse(const BijectionRule& rule, Partition lam, const ClassTag& dest) {
    if (!classify(lam, dest))
        throw std::domain_error("inverse(" + std::string(to_string(rule.id)) +
                                ", k=" + std::to_string(rule.k) + "): result " + lam.str() +
                                " failed destination " + to_string(dest));
    return lam;
}

// Shared inverse of the B-component branch of L1..L4: restore the 2s, and
// when the second smallest sits directly above the smallest, restore its 1
// as well; `promote` tells whether the merged branch raises k by one.
Partition invert_b_component(const BijectionRule& rule, const Partition& mu, int k,
                             ClassKind plain_kind, ClassKind merged_kind) {
    const auto st = stats(mu);
    const bool merged = st.second_smallest && *st.second_smallest == st.smallest + 1;
    if (merged) {
        auto dest = merged_kind == ClassKind::B0
                        ? ClassTag::b0(k + 1, mu.weight() + 2 * k + 1)
                        : ClassTag::b1(k + 1, mu.weight() + 2 * k + 1);
        return finish_inverse(rule, bump_smallest_and_second(mu), dest);
    }
    auto dest = plain_kind == ClassKind::B0 ? ClassTag::b0(k, mu.weight() + 2 * k)
                                            : ClassTag::b1(k, mu.weight() + 2 * k);
    return finish_inverse(rule, bump_all_smallest(mu, 2), dest);
}

// Shared inverse of the PDE-component branch: adjoin ones, the count
// depending on the parity of the length.
Partition invert_pde_component(const BijectionRule& rule, const Partition& mu, int k,
                               ClassKind few_kind, ClassKind many_kind, int length_parity_for_few) {
    const bool few = mu.length() % 2 == length_parity_for_few;
    if (few) {
        auto dest = few_kind == ClassKind::B0 ? ClassTag::b0(k, mu.weight() + k)
                                              : ClassTag::b1(k, mu.weight() + k);
        return finish_inverse(rule, append_parts(mu, 1, k), dest);
    }
    auto dest = many_kind == ClassKind::B0 ? ClassTag::b0(k + 1, mu.weight() + k + 1)
                                           : ClassTag::b1(k + 1, mu.weight() + k + 1);
    return finish_inverse(rule, append_parts(mu, 1, k + 1), dest);
}

// Shared inverse of the PDO-component branch: adjoin k twos, first folding
// a smallest part 1 into a 2 when present.
Partition invert_pdo_component(const BijectionRule& rule, const Partition& mu, int k,
                               ClassKind plain_kind, ClassKind merged_kind) {
    const bool has_one = !mu.empty() && stats(mu).smallest == 1;
    if (has_one) {
        auto dest = merged_kind == ClassKind::B0
                        ? ClassTag::b0(k + 1, mu.weight() + 2 * k + 1)
                        : ClassTag::b1(k + 1, mu.weight() + 2 * k + 1);
        return finish_inverse(rule, bump_single_smallest_and_append_twos(mu, k), dest);
    }
    auto dest = plain_kind == ClassKind::B0 ? ClassTag::b0(k, mu.weight() + 2 * k)
                                            : ClassTag::b1(k, mu.weight() + 2 * k);
    return finish_inverse(rule, append_parts(mu, 2, k), dest);
}

}  // namespace

Partition inverse(const BijectionRule& rule, const Partition& mu, const ClassTag& mu_tag) {
    validate_rule(rule);
    const int k = rule.k;

    switch (rule.id) {
    case RuleId::THM1A: {
        if (mu_tag.kind == ClassKind::SPTKD && mu_tag.k == k - 1) {
            require_tagged_member(rule, mu, mu_tag);
            // put one 1 back on each of the k-1 copies of the smallest;
            // lands in SPTKD(k) when the bumped copies meet the second
            // smallest, in SPTKD(k-1) otherwise
            const auto st = stats(mu);
            const bool merged = st.second_smallest && *st.second_smallest == st.smallest + 1;
            auto dest = ClassTag::spt_d(merged ? k : k - 1, mu.weight() + k - 1);
            return finish_inverse(rule, bump_all_smallest(mu, 1), dest);
        }
        if (mu_tag.kind == ClassKind::PD && !mu_tag.k) {
            require_tagged_member(rule, mu, mu_tag);
            // adjoin k-1 ones; an existing 1 raises the multiplicity to k
            const bool has_one = !mu.empty() && stats(mu).smallest == 1;
            auto dest = ClassTag::spt_d(has_one ? k : k - 1, mu.weight() + k - 1);
            return finish_inverse(rule, append_parts(mu, 1, k - 1), dest);
        }
        bad_inverse_tag(rule, mu_tag);
    }

    case RuleId::L1: {
        if (mu_tag.kind == ClassKind::B1 && mu_tag.k == k) {
            require_tagged_member(rule, mu, mu_tag);
            return invert_b_component(rule, mu, k, ClassKind::B1, ClassKind::B0);
        }
        if (mu_tag.kind == ClassKind::PDE) {
            require_tagged_member(rule, mu, mu_tag);
            // odd length -> k ones -> B1(k, 2t); even length -> k+1 ones -> B0(k+1, 2t+1)
            return invert_pde_component(rule, mu, k, ClassKind::B1, ClassKind::B0, 1);
        }
        bad_inverse_tag(rule, mu_tag);
    }

    case RuleId::L2: {
        if (mu_tag.kind == ClassKind::B1 && mu_tag.k == k) {
            require_tagged_member(rule, mu, mu_tag);
            return invert_b_component(rule, mu, k, ClassKind::B1, ClassKind::B0);
        }
        if (mu_tag.kind == ClassKind::PDE) {
            require_tagged_member(rule, mu, mu_tag);
            // odd length -> k ones -> B1(k, 2t-1); even -> k+1 ones -> B0(k+1, 2t)
            return invert_pde_component(rule, mu, k, ClassKind::B1, ClassKind::B0, 1);
        }
        if (mu_tag.kind == ClassKind::PDO) {
            require_tagged_member(rule, mu, mu_tag);
            // smallest 1 folds into a 2 -> B0(k+1, 2t); otherwise -> B1(k, 2t-1)
            return invert_pdo_component(rule, mu, k, ClassKind::B1, ClassKind::B0);
        }
        bad_inverse_tag(rule, mu_tag);
    }

    case RuleId::L3: {
        if (mu_tag.kind == ClassKind::B0 && mu_tag.k == k) {
            require_tagged_member(rule, mu, mu_tag);
            return invert_b_component(rule, mu, k, ClassKind::B0, ClassKind::B1);
        }
        if (mu_tag.kind == ClassKind::PDE) {
            require_tagged_member(rule, mu, mu_tag);
            // even length -> k ones -> B0(k, 2t-1); odd -> k+1 ones -> B1(k+1, 2t)
            return invert_pde_component(rule, mu, k, ClassKind::B0, ClassKind::B1, 0);
        }
        bad_inverse_tag(rule, mu_tag);
    }

    case RuleId::L4: {
        if (mu_tag.kind == ClassKind::B0 && mu_tag.k == k) {
            require_tagged_member(rule, mu, mu_tag);
            return invert_b_component(rule, mu, k, ClassKind::B0, ClassKind::B1);
        }
        if (mu_tag.kind == ClassKind::PDE) {
            require_tagged_member(rule, mu, mu_tag);
            // even length -> k ones -> B0(k, 2t); odd -> k+1 ones -> B1(k+1, 2t+1)
            return invert_pde_component(rule, mu, k, ClassKind::B0, ClassKind::B1, 0);
        }
        if (mu_tag.kind == ClassKind::PDO) {
            require_tagged_member(rule, mu, mu_tag);
            // smallest 1 folds into a 2 -> B1(k+1, 2t+1); otherwise -> B0(k, 2t)
            return invert_pdo_component(rule, mu, k, ClassKind::B0, ClassKind::B1);
        }
        bad_inverse_tag(rule, mu_tag);
    }
    }
    throw std::invalid_argument("inverse: bad rule id");
}

std::vector<ClassTag> domain_components(const BijectionRule& rule, long long cell) {
    validate_rule(rule);
    const int k = rule.k;
    const long long t = cell;
    switch (rule.id) {
    case RuleId::THM1A:
        return {ClassTag::spt_d(k, cell), ClassTag::spt_d(k - 1, cell)};
    case RuleId::L1:
        return {ClassTag::b0(k + 1, 2 * t + 1), ClassTag::b1(k, 2 * t)};
    case RuleId::L2:
        return {ClassTag::b0(k + 1, 2 * t), ClassTag::b1(k, 2 * t - 1)};
    case RuleId::L3:
        return {ClassTag::b0(k, 2 * t - 1), ClassTag::b1(k + 1, 2 * t)};
    case RuleId::L4:
        return {ClassTag::b0(k, 2 * t), ClassTag::b1(k + 1, 2 * t + 1)};
    }
    throw std::invalid_argument("domain_components: bad rule id");
}

std::vector<ClassTag> codomain_components(const BijectionRule& rule, long long cell) {
    validate_rule(rule);
    const int k = rule.k;
    const long long t = cell;
    switch (rule.id) {
    case RuleId::THM1A:
        return {ClassTag::spt_d(k - 1, cell - k + 1), ClassTag::pd(cell - k + 1)};
    case RuleId::L1:
        return {ClassTag::b1(k, 2 * t - 2 * k), ClassTag::pde(2 * t - k)};
    case RuleId::L2:
        return {ClassTag::b1(k, 2 * t - 2 * k - 1), ClassTag::pde(2 * t - k - 1),
                ClassTag::pdo(2 * t - 2 * k - 1)};
    case RuleId::L3:
        return {ClassTag::b0(k, 2 * t - 2 * k - 1), ClassTag::pde(2 * t - k - 1)};
    case RuleId::L4:
        return {ClassTag::b0(k, 2 * t - 2 * k), ClassTag::pde(2 * t - k),
                ClassTag::pdo(2 * t - 2 * k)};
    }
    throw std::invalid_argument("codomain_components: bad rule id");
}

std::vector<Partition> enumerate_class(const ClassTag& tag) {
    std::vector<Partition> out;
    if (tag.weight < 0)
        return out;
    for_each_partition(tag.weight, [&](std::span<const int> parts) {
        if (classify(parts, tag))
            out.push_back(Partition::from_sorted({parts.begin(), parts.end()}));
    });
    return out;
}

BijectionReport verify_rule(const BijectionRule& rule, long long cell) {
    validate_rule(rule);
    if (cell < 1)
        throw std::invalid_argument("verify_rule: cell parameter must be >= 1");
    const auto start = std::chrono::steady_clock::now();
    BijectionReport rep;
    rep.rule = rule;
    rep.n = cell;
    const auto codom = codomain_components(rule, cell);
    for (const auto& dom_tag : domain_components(rule, cell)) {
        for (auto& lam : enumerate_class(dom_tag)) {
            ++rep.domain_size;
            try {
                const auto mapped = forward(rule, lam);
                if (std::find(codom.begin(), codom.end(), mapped.tag) == codom.end()) {
                    rep.codomain_violations.push_back(lam);
                    continue;
                }
                if (inverse(rule, mapped.image, mapped.tag) != lam)
                    rep.roundtrip_failures.push_back(lam);
            } catch (const std::domain_error&) {
                rep.codomain_violations.push_back(lam);
            }
        }
    }
    for (const auto& cod_tag : codom) {
        for (auto& mu : enumerate_class(cod_tag)) {
            ++rep.codomain_size;
            try {
                const auto lam = inverse(rule, mu, cod_tag);
                const auto mapped = forward(rule, lam);
                if (!(mapped.image == mu) || !(mapped.tag == cod_tag))
                    rep.roundtrip_failures.push_back(mu);
            } catch (const std::domain_error&) {
                rep.roundtrip_failures.push_back(mu);
            }
        }
    }
    rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    return rep;
}

const char* to_string(RuleId id) {
    switch (id) {
    case RuleId::THM1A:
        return "THM1A";
    case RuleId::L1:
        return "L1";
    case RuleId::L2:
        return "L2";
    case RuleId::L3:
        return "L3";
    case RuleId::L4:
        return "L4";
    }
    return "?";
}

}  // namespace sptk
