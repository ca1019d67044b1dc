#include <doctest.h>

#include <fstream>
#include <sstream>
#include <string>

#include "shuhan/cartan.hpp"

using namespace shuhan;

namespace {

std::string render(const CartanLabel& label)
{
    const MatrixQ g = generator(label);
    std::ostringstream os;
    os << label.str() << ":";
    for (std::size_t i = 0; i < g.order(); ++i) {
        os << (i ? " |" : "");
        for (std::size_t j = 0; j < g.order(); ++j) {
            os << " " << g(i, j).str();
        }
    }
    return os.str();
}

} // namespace

TEST_CASE("generator matrices match the frozen table")
{
    std::ifstream in(SHUHAN_FIXTURES "/generators.txt");
    REQUIRE(in);
    std::string line;
    std::size_t rows = 0;
    const auto labels = all_labels(8, true, true);
    while (std::getline(in, line)) {
        REQUIRE(rows < labels.size());
        CHECK(render(labels[rows]) == line);
        ++rows;
    }
    CHECK(rows == labels.size());
}
