#ifndef RATSUB_GROUP_FILE_HPP
#define RATSUB_GROUP_FILE_HPP

#include <optional>

#include "ratsub/decider.hpp"

namespace ratsub {

/// Parsed group definition file.  The text declares named definitions
///
///   group NAME {
///     kind free | finite | abelian | overgroup | hnn | amalgam
///          | graph_of_groups | product
///     ...kind-specific lines...
///   }
///
/// followed by one `root NAME` directive selecting the definition to expose.
/// `#` starts a comment; words are space-separated letter names with `1` for
/// the empty word.  Kind-specific lines:
///
///   free:            generators a b ...            (inverse letters implicit)
///   abelian:         free_rank n / torsion m1 m2 ...
///   finite:          row v0 v1 ... (one per element; element 0 = identity)
///                    generator x e (letter name -> element; inverse implicit)
///   overgroup:       subgroup NAME / generators x y ... / cosets n
///                    rep i word... (coset representative, i >= 1)
///                    entry i x j word... (coset i, letter x, target coset j,
///                                         rewrite word over subgroup letters)
///   hnn:             base NAME / stable t / edge_group NAME
///                    embed_in e word... / embed_out e word...
///   amalgam:         left NAME / right NAME / edge_group NAME
///                    embed_left e word... / embed_right e word...
///   graph_of_groups: base VNAME / vertex VNAME GROUPNAME
///                    edge ENAME VFROM VTO GROUPNAME
///                    embed ENAME VNAME e word...
///   product:         generators a b ... (free factor)
///                    partner abelian | free | free_commutative_monoid
///                            | free_monoid
///                    partner_free_rank n / partner_torsion m1 ... (abelian)
///                    partner_generators c d ... (free partner; both factors
///                        nonabelian free is rejected as undecidable)
///                    partner_rank k (free_commutative_monoid)
///                    partner_letters p q ... (free_monoid)
struct GroupFile {
    std::string root;
    bool is_group = true;
    std::optional<GroupDecider> group;  // set when is_group
    std::optional<MonoidDecider> monoid; // set otherwise
    /// Construction-time checks performed, as (description, "pass"/"fail: why").
    std::vector<std::pair<std::string, std::string>> checks;
};

/// Parses and constructs the root decider.  Throws parse_error on malformed
/// text, unsupported_composition on undecidable combinations, and
/// validation_error when a construction-time check fails.
GroupFile parse_group_file(const std::string& text);

/// Like parse_group_file but turns construction-check failures into `fail`
/// entries of `checks` instead of exceptions (parse errors still throw).
/// When a check fails, `group`/`monoid` are empty.
GroupFile validate_group_file(const std::string& text);

} // namespace ratsub

#endif
