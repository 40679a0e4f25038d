#include "radiomesh/errors.hpp"
#include "radiomesh/io.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

namespace radiomesh {
namespace {

ParsedGraph parse(const std::string& text) {
    std::istringstream in(text);
    return read_graph(in);
}

Labeling parse_labels(const std::string& text) {
    std::istringstream in(text);
    return read_labeling(in);
}

TEST(GraphIo, RoundTripPlain) {
    for (const auto& g : {build_path(5), build_star(4), build_mesh(3)}) {
        std::ostringstream os;
        write_graph(os, g);
        auto back = parse(os.str());
        EXPECT_EQ(back.graph.size(), g.size());
        EXPECT_EQ(back.graph.edges(), g.edges());
        EXPECT_FALSE(back.coords.has_value());
    }
}

TEST(GraphIo, RoundTripProductWithCoords) {
    for (auto idx : kAllIndexings) {
        ProductGraph pg(ProductParams(3, 2), idx);
        std::ostringstream os;
        write_graph(os, pg);
        auto back = parse(os.str());
        EXPECT_EQ(back.graph.edges(), pg.graph().edges());
        ASSERT_TRUE(back.coords.has_value());
        ASSERT_EQ(back.coords->size(), pg.graph().size());
        for (VertexId v = 0; v < pg.graph().size(); ++v) {
            EXPECT_EQ((*back.coords)[v], pg.coord(v));
        }
    }
}

TEST(GraphIo, ParseErrorsCarryLineNumbers) {
    auto expect_error = [](const std::string& text, const std::string& fragment) {
        try {
            (void)parse(text);
            ADD_FAILURE() << "no error for: " << text;
        } catch (const InvalidParameter& e) {
            EXPECT_NE(std::string(e.what()).find(fragment), std::string::npos) << e.what();
        }
    };
    expect_error("0 1\n", "line 1");
    expect_error("vertices 3\n1 0\n", "line 2");
    expect_error("vertices 3\n0 3\n", "out of range");
    expect_error("vertices 3\n0 2\n0 1\n", "sorted");
    expect_error("vertices 3\n0 1\n0 1\n", "sorted");
    expect_error("vertices 3\n# note\n0 x\n", "line 3");
    expect_error("vertices 2\n0 1 7\n", "line 2");
    EXPECT_THROW((void)parse("# only a comment\n"), InvalidParameter);
    EXPECT_THROW((void)parse("vertices 2\n# coord 0 0 0 0\n0 1\n"), InvalidParameter);
}

TEST(GraphIo, MissingFile) {
    EXPECT_THROW((void)read_graph(std::filesystem::path("/nonexistent/graph.txt")), IoError);
}

TEST(LabelingIo, RoundTrip) {
    Labeling l{{0, 3, 1, 12}};
    std::ostringstream os;
    write_labeling(os, l);
    EXPECT_NE(os.str().find("# span 12"), std::string::npos);
    EXPECT_EQ(parse_labels(os.str()), l);
}

TEST(LabelingIo, Errors) {
    EXPECT_THROW((void)parse_labels("0 1\n2 3\n"), InvalidParameter);
    EXPECT_THROW((void)parse_labels("0 1\n0 3\n"), InvalidParameter);
    EXPECT_THROW((void)parse_labels("0 -1\n"), InvalidParameter);
    EXPECT_THROW((void)parse_labels("0 abc\n"), InvalidParameter);
    EXPECT_THROW((void)parse_labels("0 0\n1 4\n# span 5\n"), InvalidParameter);
    EXPECT_EQ(parse_labels("0 0\n1 4\n# span 4\n").labels, (std::vector<Label>{0, 4}));
    EXPECT_EQ(parse_labels("# no span line\n0 2\n").labels, (std::vector<Label>{2}));
}

} // namespace
} // namespace radiomesh
