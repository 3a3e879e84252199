#ifndef ELLIDENT_CATALOG_HPP
#define ELLIDENT_CATALOG_HPP

#include <optional>
#include <string>
#include <vector>

#include "ellident/identity.hpp"

namespace ellident {

class unknown_identity : public std::invalid_argument {
public:
    explicit unknown_identity(const std::string& id)
        : std::invalid_argument("unknown identity id '" + id + "'") {}
};

// A parametric family of identities of arbitrary rank (rank grows with n).
struct FamilyInstance {
    std::string family_id;
    int n = 1;
    Identity realized;
};

inline constexpr int kFamilyMaxN = 16;

// The fixed identity catalog: every local identity of rank 2..5 plus the
// named two-sided relations used elsewhere in the suite.  Immutable after
// construction.
class Catalog {
public:
    static const Catalog& instance();

    // Sorted ids, optionally restricted to a prefix.  Family ids are listed
    // alongside the fixed entries.
    std::vector<std::string> ids(const std::string& prefix = "") const;

    const Identity* find(const std::string& id) const;
    const Identity& at(const std::string& id) const;

    const std::vector<Identity>& fixed_entries() const { return entries_; }
    const std::vector<std::string>& family_ids() const { return families_; }
    bool is_family(const std::string& id) const;

private:
    Catalog();
    std::vector<Identity> entries_;
    std::vector<std::string> families_;
};

// Fully expanded instance of one arbitrary-rank family, 1 <= n <= kFamilyMaxN.
FamilyInstance instantiate_family(const std::string& family_id, int n);

}  // namespace ellident

#endif
