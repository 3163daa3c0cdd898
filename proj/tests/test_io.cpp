#include <doctest.h>

#include "splitdec/io.hpp"
#include "splitdec/oracle.hpp"
#include "splitdec/split_core.hpp"
#include "support.hpp"

using namespace splitdec;
namespace ts = splitdec::testsupport;

TEST_CASE("json round trip") {
    Graph g = load_graph("a b\nb c\nc d\n");
    SplitTree t = split_decomposition(g, 0);
    std::string js = to_json(t, g.labels());
    std::vector<std::string> labels;
    SplitTree back = from_json(js, &labels);
    CHECK(back.canonical_string() == t.canonical_string());
    CHECK(labels == g.labels());
    CHECK(to_json(back, labels) == js);
}

TEST_CASE("dot rendering") {
    Graph g = ts::star(3);
    SplitTree t = split_decomposition(g, 0);
    std::string dot = to_dot(t, g.labels());
    CHECK(dot.find("graph splittree") != std::string::npos);
    CHECK(dot.find("shape=box") != std::string::npos);
    CHECK(dot.find("label=\"S\"") != std::string::npos);
    CHECK(dot.find("dir=") != std::string::npos);  // oriented star center

    Graph k = ts::complete(4);
    std::string dk = to_dot(split_decomposition(k, 0), k.labels());
    CHECK(dk.find("label=\"C\"") != std::string::npos);
    CHECK(dk.find("dir=") == std::string::npos);
}

TEST_CASE("text rendering mentions centers") {
    Graph g = load_graph("a b\nb c\nc d\n");
    SplitTree t = split_decomposition(g, 0);
    std::string txt = t.render_text(g.labels());
    CHECK(txt.find("S (center: ") != std::string::npos);
}
