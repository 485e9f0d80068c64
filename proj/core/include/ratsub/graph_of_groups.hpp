#ifndef RATSUB_GRAPH_OF_GROUPS_HPP
#define RATSUB_GRAPH_OF_GROUPS_HPP

#include <memory>

#include "ratsub/decider.hpp"
#include "ratsub/finite_group.hpp"

namespace ratsub {

struct GogVertex {
    std::string name;
    GroupDecider decider;
};

/// Directed edge of a graph of groups.  Edges come in matched reverse pairs;
/// the pair shares one finite edge group, and alpha_images embeds it into the
/// source-vertex group (the reverse edge holds the other embedding).
struct GogEdge {
    std::string name; // also the letter name for this direction
    std::uint32_t alpha;
    std::uint32_t reverse;
    std::shared_ptr<const FiniteGroup> group;
    std::vector<Word> alpha_images; // per element, over vertex alpha's generators; [0] empty
};

class GraphOfGroups {
public:
    GraphOfGroups(std::vector<GogVertex> vertices, std::vector<GogEdge> edges,
                  std::uint32_t base_vertex);

    const std::vector<GogVertex>& vertices() const { return vertices_; }
    const std::vector<GogEdge>& edges() const { return edges_; }
    std::uint32_t base_vertex() const { return base_; }
    std::uint32_t omega(std::uint32_t e) const { return edges_[edges_[e].reverse].alpha; }

private:
    std::vector<GogVertex> vertices_;
    std::vector<GogEdge> edges_;
    std::uint32_t base_;
};

struct FundamentalGenerators {
    InvolutiveAlphabet alphabet; // extended vertex letters plus non-tree edge letters
    Morphism rho;                // into the internal cycle-word alphabet
};

/// Generators of the fundamental group at the base vertex, with the morphism
/// sending each generator to its cycle word (conjugation along the
/// breadth-first spanning tree from the base vertex).
FundamentalGenerators fundamental_generators(const GraphOfGroups& gog);

/// Rational-subset decider for the fundamental group over the fundamental
/// generators, by rewriting-saturation over the combined alphabet.
GroupDecider graph_of_groups_decider(const GraphOfGroups& gog);

/// HNN extension of `base` with stable letter `stable_name`: associated
/// finite subgroups given by the two embeddings of `assoc`.
GroupDecider hnn_decider(const GroupDecider& base, const FiniteGroup& assoc,
                         const std::vector<Word>& phi_in, const std::vector<Word>& phi_out,
                         const std::string& stable_name = "y");

/// Amalgamated free product of `left` and `right` over the finite group
/// `sub`; a free product when `sub` is trivial.
GroupDecider amalgam_decider(const GroupDecider& left, const GroupDecider& right,
                             const FiniteGroup& sub, const std::vector<Word>& phi_l,
                             const std::vector<Word>& phi_r);

} // namespace ratsub

#endif
