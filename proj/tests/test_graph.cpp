#include <doctest.h>

#include "ndmc/cliquewidth.hpp"
#include "ndmc/quotient.hpp"
#include "ndmc/vertex_cover.hpp"
#include "support.hpp"

using namespace ndmc;
using namespace ndmc::test;

TEST_CASE("same_type basics") {
    Graph k3 = complete_graph(3);
    CHECK(same_type(k3, 0, 1));

    Graph p4 = path_graph(4);
    CHECK_FALSE(same_type(p4, 0, 3));

    Graph k22 = complete_bipartite(2, 2);
    CHECK(same_type(k22, 0, 1));
    CHECK_FALSE(same_type(k22, 0, 2));

    CHECK_THROWS_AS(same_type(k3, 0, 7), InputError);
}

TEST_CASE("same_type respects colors and digraph orientation") {
    Graph g = complete_graph(3);
    g.add_color("red", {0});
    CHECK_FALSE(same_type(g, 0, 1));
    CHECK(same_type(g, 1, 2));

    Graph d = Graph::digraph(2);
    d.add_edge(0, 1);
    CHECK_FALSE(same_type(d, 0, 1));  // a one-way internal arc is not swappable

    Graph mutual = Graph::digraph(2);
    mutual.add_edge(0, 1);
    mutual.add_edge(1, 0);
    CHECK(same_type(mutual, 0, 1));

    Graph d3 = Graph::digraph(3);
    d3.add_edge(0, 2);
    d3.add_edge(2, 1);
    CHECK_FALSE(same_type(d3, 0, 1));  // one points at 2, the other is pointed at
}

TEST_CASE("same_type is an equivalence relation on random graphs") {
    Rng rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        GraphGenOptions o;
        o.max_n = 6;
        o.directed = trial % 2 == 1;
        Graph g = random_graph(rng, o);
        for (int u = 0; u < g.n; ++u) CHECK(same_type(g, u, u));
        for (int u = 0; u < g.n; ++u)
            for (int v = 0; v < g.n; ++v) {
                CHECK(same_type(g, u, v) == same_type(g, v, u));
                for (int w = 0; w < g.n; ++w)
                    if (same_type(g, u, v) && same_type(g, v, w)) CHECK(same_type(g, u, w));
            }
    }
}

TEST_CASE("neighborhood_partition widths") {
    CHECK(nd(complete_graph(5)) == 1);
    CHECK(nd(complete_graph(9)) == 1);
    CHECK(nd(complete_bipartite(3, 3)) == 2);
    CHECK(nd(cycle_graph(5)) == 5);
    CHECK(nd(star_graph(4)) == 2);
    CHECK(nd(path_graph(4)) == 4);
    CHECK(nd(Graph::undirected(0)) == 0);
}

TEST_CASE("neighborhood_partition structure and determinism") {
    Graph g = clique_join_independent(3, 4);
    NeighborhoodPartition p = neighborhood_partition(g);
    REQUIRE(p.width() == 2);
    CHECK(p.classes[0] == VertexSet{0, 1, 2});
    CHECK(p.kinds[0] == ClassKind::clique);
    CHECK(p.classes[1] == VertexSet{3, 4, 5, 6});
    CHECK(p.kinds[1] == ClassKind::independent);
    validate_partition(g, p);
}

TEST_CASE("partition minimality against brute force") {
    for (int n = 0; n <= 4; ++n)
        for (const Graph& g : all_graphs(n))
            CHECK(nd(g) == oracle_min_partition_width(g));

    Rng rng(77);
    for (int trial = 0; trial < 500; ++trial) {
        GraphGenOptions o;
        o.min_n = 5;
        o.max_n = 6;
        o.max_labels = 0;
        Graph g = random_graph(rng, o);
        CHECK(nd(g) == oracle_min_partition_width(g));
        validate_partition(g, neighborhood_partition(g));
    }
}

TEST_CASE("vertex_cover exact values and lexicographic ties") {
    VertexCoverResult star = vertex_cover(star_graph(4));
    CHECK(star.size == 1);
    CHECK(star.cover == VertexSet{0});

    VertexCoverResult c5 = vertex_cover(cycle_graph(5));
    CHECK(c5.size == 3);
    CHECK(c5.cover == VertexSet{0, 1, 3});

    CHECK(vertex_cover(edgeless_graph(4)).size == 0);
    CHECK(vertex_cover(complete_bipartite(3, 3)).size == 3);

    Graph d = Graph::digraph(2);
    d.add_edge(0, 1);
    CHECK_THROWS_AS(vertex_cover(d), InputError);
}

TEST_CASE("vertex_cover matches brute force on random graphs") {
    Rng rng(31337);
    for (int trial = 0; trial < 300; ++trial) {
        GraphGenOptions o;
        o.max_n = 8;
        o.max_colors = 0;
        o.max_labels = 0;
        Graph g = random_graph(rng, o);
        VertexCoverResult r = vertex_cover(g);
        CHECK(r.size == oracle_vertex_cover_size(g));
        // Returned set must actually cover.
        for (auto [u, v] : graph_edges(g))
            CHECK((vs_contains(r.cover, u) || vs_contains(r.cover, v)));
        CHECK(static_cast<int>(r.cover.size()) == r.size);
    }
}

TEST_CASE("partition_from_vertex_cover") {
    Graph star = star_graph(4);
    NeighborhoodPartition p = partition_from_vertex_cover(star, {0});
    CHECK(p.width() == 2);
    validate_partition(star, p);

    Graph k3 = complete_graph(3);
    CHECK(partition_from_vertex_cover(k3, {0, 1}).width() == 3);

    Graph any = cycle_graph(5);
    VertexSet all{0, 1, 2, 3, 4};
    CHECK(partition_from_vertex_cover(any, all).width() == 5);

    CHECK_THROWS_AS(partition_from_vertex_cover(k3, {0}), InputError);
}

TEST_CASE("cover bound: nd <= 2^k + k") {
    Rng rng(99);
    for (int trial = 0; trial < 300; ++trial) {
        GraphGenOptions o;
        o.max_n = 7;
        o.max_colors = 0;
        o.max_labels = 0;
        Graph g = random_graph(rng, o);
        int k = vertex_cover(g).size;
        CHECK(nd(g) <= (1 << k) + k);
        NeighborhoodPartition p = partition_from_vertex_cover(g, vertex_cover(g).cover);
        CHECK(p.width() <= (1 << k) + k);
        validate_partition(g, p);
    }
}

TEST_CASE("quotient_graph") {
    Graph k22 = complete_bipartite(2, 2);
    QuotientGraph q = quotient_graph(k22, neighborhood_partition(k22));
    REQUIRE(q.width() == 2);
    CHECK(q.nodes[0].kind == ClassKind::independent);
    CHECK(q.nodes[0].size == 2);
    CHECK(q.edge(0, 1));

    Graph k5 = complete_graph(5);
    QuotientGraph q5 = quotient_graph(k5, neighborhood_partition(k5));
    REQUIRE(q5.width() == 1);
    CHECK(q5.nodes[0].kind == ClassKind::clique);
    CHECK(q5.nodes[0].size == 5);

    Graph join = clique_join_independent(3, 4);
    QuotientGraph qj = quotient_graph(join, neighborhood_partition(join));
    REQUIRE(qj.width() == 2);
    CHECK(qj.nodes[0].kind == ClassKind::clique);
    CHECK(qj.nodes[0].size == 3);
    CHECK(qj.nodes[1].kind == ClassKind::independent);
    CHECK(qj.nodes[1].size == 4);
    CHECK(qj.edge(0, 1));

    NeighborhoodPartition bad;
    bad.classes = {{0, 1}, {2}};
    bad.kinds = {ClassKind::independent, ClassKind::independent};
    CHECK_THROWS_AS(quotient_graph(complete_bipartite(2, 2), bad), InputError);
}

TEST_CASE("refine_with_set") {
    Graph k4 = complete_graph(4);
    NeighborhoodPartition p = neighborhood_partition(k4);
    REQUIRE(p.width() == 1);

    NeighborhoodPartition r = refine_with_set(p, {0, 1});
    REQUIRE(r.width() == 2);
    CHECK(r.classes[0] == VertexSet{0, 1});
    CHECK(r.classes[1] == VertexSet{2, 3});
    CHECK(r.kinds[0] == ClassKind::clique);

    NeighborhoodPartition same = refine_with_set(p, {});
    CHECK(same.width() == 1);
    CHECK(same.classes == p.classes);

    Graph k22 = complete_bipartite(2, 2);
    NeighborhoodPartition q = refine_with_set(neighborhood_partition(k22), {0});
    CHECK(q.width() == 3);

    // Width at most doubles.
    Rng rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        GraphGenOptions o;
        o.max_n = 7;
        Graph g = random_graph(rng, o);
        NeighborhoodPartition base = neighborhood_partition(g);
        VertexSet s;
        for (int v = 0; v < g.n; ++v)
            if (rand_chance(rng, 0.5)) s.push_back(v);
        NeighborhoodPartition refined = refine_with_set(base, s);
        CHECK(refined.width() <= 2 * base.width());
        int covered = 0;
        for (const auto& cls : refined.classes) covered += static_cast<int>(cls.size());
        CHECK(covered == g.n);
    }
}

TEST_CASE("cliquewidth scripts replay to isomorphic graphs") {
    Graph k3 = complete_graph(3);
    CliquewidthScript s3 = cliquewidth_expression(k3, neighborhood_partition(k3));
    int introduces = 0, joins = 0;
    for (const auto& op : s3.ops) {
        introduces += op.kind == CwOp::Kind::introduce;
        joins += op.kind == CwOp::Kind::join;
    }
    CHECK(introduces == 3);
    CHECK(s3.used_labels() == 2);
    CHECK(s3.label_budget == 2);
    CHECK(canonical_form(replay_cliquewidth(s3)) == canonical_form(k3));

    Graph i3 = edgeless_graph(3);
    CliquewidthScript si = cliquewidth_expression(i3, neighborhood_partition(i3));
    CHECK(si.ops.size() == 3);
    CHECK(si.used_labels() == 1);
    CHECK(canonical_form(replay_cliquewidth(si)) == canonical_form(i3));

    Graph k22 = complete_bipartite(2, 2);
    CliquewidthScript sk = cliquewidth_expression(k22, neighborhood_partition(k22));
    introduces = 0;
    joins = 0;
    for (const auto& op : sk.ops) {
        introduces += op.kind == CwOp::Kind::introduce;
        joins += op.kind == CwOp::Kind::join;
    }
    CHECK(introduces == 4);
    CHECK(joins == 1);
    CHECK(sk.label_budget == 3);
    CHECK(sk.used_labels() <= 3);
    CHECK(canonical_form(replay_cliquewidth(sk)) == canonical_form(k22));

    NeighborhoodPartition trivial;
    trivial.classes = {{0}};
    trivial.kinds = {ClassKind::independent};
    CHECK_THROWS_AS(cliquewidth_expression(Graph::digraph(1), trivial), InputError);
}

TEST_CASE("cliquewidth replay across a random corpus") {
    Rng rng(4242);
    for (int trial = 0; trial < 120; ++trial) {
        GraphGenOptions o;
        o.max_n = 8;
        o.max_colors = 0;
        o.max_labels = 0;
        Graph g = random_graph(rng, o);
        NeighborhoodPartition p = neighborhood_partition(g);
        CliquewidthScript script = cliquewidth_expression(g, p);
        CHECK(script.used_labels() <= nd(g) + 1);
        CHECK(canonical_form(replay_cliquewidth(script)) == canonical_form(g));
    }
}

TEST_CASE("union scripts replay as disjoint unions") {
    auto sub = std::make_shared<CliquewidthScript>();
    sub->ops.push_back({CwOp::Kind::introduce, 1, 0, nullptr});
    sub->ops.push_back({CwOp::Kind::introduce, 2, 0, nullptr});
    sub->ops.push_back({CwOp::Kind::join, 1, 2, nullptr});
    CliquewidthScript script;
    script.ops.push_back({CwOp::Kind::introduce, 1, 0, nullptr});
    script.ops.push_back({CwOp::Kind::union_with, 0, 0, sub});
    Graph g = replay_cliquewidth(script);
    CHECK(g.n == 3);
    CHECK(g.edge_count() == 1);
}

TEST_CASE("graph text format round trip") {
    Graph g = Graph::digraph(4);
    g.add_edge(0, 1);
    g.add_edge(2, 3);
    g.add_color("red", {0, 2});
    g.add_label("root", 3);
    Graph back = parse_graph(render_graph(g));
    CHECK(back.directed);
    CHECK(back.n == 4);
    CHECK(back.out == g.out);
    CHECK(back.colors == g.colors);
    CHECK(back.labels == g.labels);

    CHECK_THROWS_AS(parse_graph("graph 2\ne 0 2\n"), InputError);
    CHECK_THROWS_AS(parse_graph("graph 2\ne 0 0\n"), InputError);
    CHECK_THROWS_AS(parse_graph("graph 2\nq 1\n"), InputError);
    CHECK_THROWS_AS(parse_graph(""), InputError);
    CHECK_THROWS_AS(parse_graph("graph 3\nl a 0\nl a 1\n"), InputError);

    Graph commented = parse_graph("# a comment\ngraph 2 # trailing\ne 0 1\n");
    CHECK(commented.edge_count() == 1);
}
