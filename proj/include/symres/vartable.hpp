#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "symres/errors.hpp"

namespace symres {

/// Ordered table of distinct variable names, fixed for its lifetime.
/// Variables may additionally be grouped into disjoint named blocks for
/// multidegree queries. Shared immutably by every polynomial built on it.
class VarTable {
public:
    using Ptr = std::shared_ptr<const VarTable>;

    static Ptr make(std::vector<std::string> names) {
        return make(std::move(names), {});
    }

    static Ptr make(std::vector<std::string> names,
                    std::vector<std::pair<std::string, std::vector<std::string>>> blocks) {
        auto t = std::shared_ptr<VarTable>(new VarTable());
        t->names_ = std::move(names);
        for (std::size_t i = 0; i < t->names_.size(); ++i) {
            if (t->names_[i].empty())
                throw std::invalid_argument("empty variable name");
            if (!t->index_.emplace(t->names_[i], i).second)
                throw std::invalid_argument("duplicate variable name: " + t->names_[i]);
        }
        std::set<std::size_t> used;
        for (auto& [bname, members] : blocks) {
            std::vector<std::size_t> idx;
            for (auto& v : members) {
                auto it = t->index_.find(v);
                if (it == t->index_.end()) throw unknown_variable(v);
                if (!used.insert(it->second).second)
                    throw std::invalid_argument("blocks must be disjoint: " + v);
                idx.push_back(it->second);
            }
            if (!t->blocks_.emplace(bname, std::move(idx)).second)
                throw std::invalid_argument("duplicate block name: " + bname);
        }
        return t;
    }

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }

    std::optional<std::size_t> index(std::string_view name) const {
        auto it = index_.find(std::string(name));
        return it == index_.end() ? std::nullopt : std::optional<std::size_t>(it->second);
    }

    std::size_t require(std::string_view name) const {
        auto i = index(name);
        if (!i) throw unknown_variable(std::string(name));
        return *i;
    }

    bool has_block(std::string_view name) const {
        return blocks_.count(std::string(name)) != 0;
    }

    const std::vector<std::size_t>& block(std::string_view name) const {
        auto it = blocks_.find(std::string(name));
        if (it == blocks_.end()) throw unknown_block(std::string(name));
        return it->second;
    }

    bool same_names(const VarTable& o) const { return names_ == o.names_; }

private:
    VarTable() = default;
    std::vector<std::string> names_;
    std::map<std::string, std::size_t, std::less<>> index_;
    std::map<std::string, std::vector<std::size_t>, std::less<>> blocks_;
};

/// Two tables are interchangeable when they list the same names in the
/// same order (blocks are a query aid, not part of the identity).
inline bool tables_compatible(const VarTable::Ptr& a, const VarTable::Ptr& b) {
    return a == b || (a && b && a->same_names(*b));
}

inline void require_compatible(const VarTable::Ptr& a, const VarTable::Ptr& b) {
    if (!tables_compatible(a, b)) throw table_mismatch("variable tables differ");
}

} // namespace symres
