/*
   Copyright 2026 The ratmap Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// A short walk through the library: maps, their sum, a certificate chain and the plane families.
// With an argument "dump-samples DIR" it also writes the three built-in chains as JSON files.

#include <fstream>
#include <iostream>
#include <string>

#include "ratmap/ratmap.hpp"

using namespace ratmap;

namespace {

void write(const std::string& path, const json& j) {
    std::ofstream(path) << j.dump(2) << "\n";
    std::cout << "wrote " << path << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    const RingTag Z = RingTag::integers();

    PointedMap id = named(NamedMap::identity), me = named(NamedMap::minus_epsilon);
    PointedMap sum = oplus(id, me);
    std::cout << id.to_string() << " + " << me.to_string() << " = " << sum.to_string() << "\n";

    SL2Witness w = bezout_pair(sum);
    std::cout << "  p = " << print_poly(w.p) << ", q = " << print_poly(w.q) << ", res = " << sum.res() << "\n";

    HomotopyCert c = HomotopyCert::parse("X^2/(T*X + 1)", Z);
    std::cout << c.to_string() << ": " << endpoint(c, 0).to_string() << " ~ " << endpoint(c, 1).to_string() << "\n";

    ChainReport rep = verify_chain(builtin_chain("square-to-sum"));
    std::cout << "square-to-sum chain: " << (rep.pass ? "PASS" : "FAIL") << "\n";

    MatrixChainReport mrep = verify_matrix_chain(builtin_matrix_chain("swap-commutator"));
    std::cout << "swap-commutator chain: " << (mrep.pass ? "PASS" : "FAIL") << "\n";

    PlaneChain plane = builtin_plane_chain("plane-square");
    PlaneChainReport prep = verify_plane_chain(plane);
    std::cout << "plane-square chain: " << (prep.pass ? "PASS" : "FAIL") << "\n";

    if (argc == 3 && std::string(argv[1]) == "dump-samples") {
        std::string dir = argv[2];
        write(dir + "/square_to_sum_chain.json", to_json(builtin_chain("square-to-sum")));
        write(dir + "/swap_matrix_chain.json", to_json(builtin_matrix_chain("swap-commutator")));
        // Ship the plane chain with its certificates so the file check needs no search.
        for (std::size_t i = 0; i < plane.links.size(); ++i) plane.links[i].certificate = prep.links[i].certificate;
        write(dir + "/plane_chain.json", to_json(plane));
    }
    return rep.pass && mrep.pass && prep.pass ? 0 : 1;
}
