// Writes the compositional fixture space and its probe list.
//
//   make_fixture [out_dir]   (default: data)

#include <filesystem>
#include <iostream>

#include "semvec/compositional_fixture.hpp"

int main(int argc, char** argv) {
  const std::filesystem::path dir = argc > 1 ? argv[1] : "data";
  try {
    std::filesystem::create_directories(dir);
    const auto space = semvec::compositional_fixture();
    semvec::write_file((dir / "compositional_fixture.txt").string(),
                       semvec::write_embeddings(space, semvec::Format::text_header));
    std::string probes;
    for (const auto& p : semvec::compositional_fixture_probes())
      probes += p.a + " " + p.b + " " + p.c + " " + p.d + "\n";
    semvec::write_file((dir / "fixture_probes.txt").string(), probes);
    std::cout << "wrote " << space.size() << " x " << space.dim() << " fixture to " << dir.string() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "make_fixture: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
