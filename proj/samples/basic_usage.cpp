// Builds a few groups, prints their enhanced power graph statistics and certified lambda values.

#include <cstdio>

#include "epglab/epglab.hpp"

int main(int argc, char** argv) {
  using namespace epglab;
  std::vector<std::string> specs = {"Z6", "Z2 x Z2", "Q8", "D8", "Z3 x Z3", "@samples/s3.table"};
  if (argc > 1) specs.assign(argv + 1, argv + argc);
  for (const auto& s : specs) {
    try {
      const FiniteGroup g = build_group(s);
      const Graph epg = enhanced_power_graph(g);
      const auto cert = lambda_closed_form(g);
      std::printf("%-12s order %3d  edges %5lld  |Dom| %2zu  ", g.name().c_str(), g.order(), epg.edge_count(),
                  dominating_vertices(epg).size());
      const LambdaCertificate c = cert && cert->is_exact() ? *cert : lambda_exact(epg);
      if (c.is_exact())
        std::printf("lambda %d (%s)\n", c.value, to_string(c.method));
      else
        std::printf("%d <= lambda <= %d\n", c.lower, c.upper);
    } catch (const Error& e) {
      std::printf("%-12s error: %s\n", s.c_str(), e.what());
    }
  }
}
