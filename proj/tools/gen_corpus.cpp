// Regenerates the bundled Cayley-table corpus under data/groups/.

#include <filesystem>
#include <fstream>
#include <iostream>

#include "exgroup/families.hpp"
#include "exgroup/group.hpp"
#include "exgroup/io.hpp"

int main(int argc, char** argv) {
    namespace fs = std::filesystem;
    const fs::path dir = argc > 1 ? argv[1] : "data/groups";
    fs::create_directories(dir);

    auto emit = [&dir](const std::string& name, const exg::Group& g) {
        std::ofstream out(dir / (name + ".txt"));
        exg::write_group(out, g);
        std::cout << name << ": order " << g.n << "\n";
    };

    for (int n = 2; n <= 12; ++n) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "cyclic_%02d", n);
        emit(buf, exg::cyclic_group(n));
    }
    emit("cyclic_16", exg::cyclic_group(16));

    emit("dihedral_06", exg::dihedral_group(3));
    emit("dihedral_08", exg::dihedral_group(4));
    emit("dihedral_10", exg::dihedral_group(5));
    emit("dihedral_12", exg::dihedral_group(6));
    emit("dihedral_16", exg::dihedral_group(8));

    emit("elem_04", exg::elementary_abelian_group(2, 2));
    emit("elem_08", exg::elementary_abelian_group(2, 3));
    emit("elem_09", exg::elementary_abelian_group(3, 2));

    emit("quaternion_08", exg::quaternion_group());
    emit("alternating_12", exg::alternating_group_4());

    // nonabelian order 16: modular (C8:C2), semidihedral, C4:C4, C2 x D8
    emit("modular_16", exg::semidirect_cyclic(8, 2, 5));
    emit("semidihedral_16", exg::semidirect_cyclic(8, 2, 3));
    emit("c4sc4_16", exg::semidirect_cyclic(4, 4, 3));
    emit("c2xd8_16", exg::direct_product(exg::cyclic_group(2), exg::dihedral_group(4)));

    // Frobenius groups: C7:C3, C11:C5, C19:C3
    emit("frobenius_21", exg::frobenius_subgroup_of_agl(7, 2).group);
    emit("frobenius_55", exg::frobenius_subgroup_of_agl(11, 2).group);
    emit("frobenius_57", exg::frobenius_subgroup_of_agl(19, 6).group);
    return 0;
}
