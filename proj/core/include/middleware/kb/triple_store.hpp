// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mw::kb {

using EntitySet = std::set<std::string>;

/// Reserved relation carrying class assertions (`e <TAB> type <TAB> film.film`).
inline constexpr std::string_view kTypeRelation = "type";

/// Entity ids and relation names must be embeddable in the action grammar:
/// non-empty, no surrounding whitespace, no tabs or newlines, none of `,()"{}[]`,
/// and no leading `#` (reserved for variables). Interior spaces are allowed.
bool is_valid_token(std::string_view token);

class TypedObject {
public:
    enum class Kind { kEntity, kString, kNumber };

    static TypedObject entity(std::string id) { return TypedObject(Kind::kEntity, std::move(id), 0.0); }
    static TypedObject string(std::string text) { return TypedObject(Kind::kString, std::move(text), 0.0); }
    static TypedObject number(double value) { return TypedObject(Kind::kNumber, {}, value); }

    Kind kind() const { return kind_; }
    const std::string& text() const { return text_; }
    double value() const { return number_; }

    auto operator<=>(const TypedObject&) const = default;
    bool operator==(const TypedObject&) const = default;

private:
    TypedObject(Kind kind, std::string text, double number)
        : kind_(kind), text_(std::move(text)), number_(number) {}

    Kind kind_;
    std::string text_;
    double number_;
};

struct Triple {
    std::string subject;
    std::string relation;
    TypedObject object;

    auto operator<=>(const Triple&) const = default;
    bool operator==(const Triple&) const = default;
};

class LoadError : public std::runtime_error {
public:
    LoadError(std::size_t line, const std::string& reason);
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Immutable in-memory triple store. Duplicate triples collapse; all list
/// results are sorted so rendered observations are reproducible.
class TripleStore {
public:
    TripleStore() = default;
    explicit TripleStore(std::vector<Triple> triples);

    std::size_t size() const { return triples_.size(); }
    /// Distinct triples in sorted order.
    const std::vector<Triple>& triples() const { return triples_; }

    /// True for every subject and every entity-kind object.
    bool has_entity(std::string_view id) const;
    std::size_t entity_count() const { return index_.size(); }

    std::vector<std::string> relations_of(const EntitySet& entities) const;
    EntitySet neighbors_of(const EntitySet& entities, std::string_view relation) const;
    std::vector<std::string> numeric_attributes_of(const EntitySet& entities) const;
    /// (entity, value) pairs sorted by entity then value.
    std::vector<std::pair<std::string, double>> attribute_values(const EntitySet& entities,
                                                                 std::string_view attribute) const;
    std::set<std::string> classes_of(std::string_view entity) const;

private:
    struct Edges {
        EntitySet entities;
        std::set<std::string> strings;
        std::set<double> numbers;
    };
    using RelationMap = std::map<std::string, Edges, std::less<>>;

    const RelationMap* find(std::string_view entity) const;

    std::vector<Triple> triples_;
    std::map<std::string, RelationMap, std::less<>> index_;
};

/// Reads the TAB-separated triple format. Throws LoadError naming the line.
TripleStore load_triples(std::istream& source);

/// Inverse of load_triples for a single triple (no trailing newline).
std::string format_triple(const Triple& triple);

}  // namespace mw::kb
