#include <filesystem>
#include <iostream>
#include <string>

#include "sewnet/algebra.hpp"
#include "sewnet/io.hpp"
#include "sewnet/sewing.hpp"

using namespace sewnet;

// Regenerates the shipped fixture files: the three category tables, the
// canonical Cardy algebra and Frobenius fixtures per category, the four
// targeted corruptions, an inflated correlator set, and the broken inputs
// the failure-path tests drive the CLI with.

namespace {

void gen_for(const CategoryData& C, const std::string& dir,
             const std::string& name) {
    save_category(C, dir + "/" + name + ".cat");

    CardyAlgebra can = canonical_cardy(C);
    save_cardy(can, dir + "/" + name + "-canonical.alg");
    save_frobenius(trivial_algebra(C), dir + "/" + name + "-trivial.alg");
    // the closed sector of the canonical algebra is the L(1) algebra
    save_frobenius(can.Hcl, dir + "/" + name + "-L1.alg");

    save_cardy(corrupt_cardy_I(C), dir + "/" + name + "-ctrl1.alg");
    save_cardy(corrupt_cardy_II(C), dir + "/" + name + "-ctrl2.alg");
    if (C.num_labels > 1)
        save_cardy(corrupt_cardy_III(C), dir + "/" + name + "-ctrl3.alg");
    save_cardy(corrupt_cardy_IV(C), dir + "/" + name + "-ctrl4.alg");

    CorrelatorSet S = canonical_correlators(can);
    CorrelatorSet I = inflate_correlators(S, 42);
    save_correlators(I, dir + "/" + name + "-inflated.cor");

    // scaled closed multiplication: several relations fail by construction
    CorrelatorSet B = S;
    B.corr[GeneratorTag::CMul] = scale(Scalar(0.5L), S.at(GeneratorTag::CMul));
    save_correlators(B, dir + "/" + name + "-broken.cor");
}

}  // namespace

int main(int argc, char** argv) {
    std::string dir = argc > 1 ? argv[1] : "fixtures";
    std::filesystem::create_directories(dir);

    CategoryData vect = make_vect();
    CategoryData fib = make_fibonacci();
    CategoryData ising = make_ising();

    gen_for(vect, dir, "vect");
    gen_for(fib, dir, "fibonacci");
    gen_for(ising, dir, "ising");

    SumObj tau;
    tau.summands = {Word{1}};
    save_frobenius(endomorphism_frobenius(fib, tau),
                   dir + "/fibonacci-endo.alg");
    SumObj sigma;
    sigma.summands = {Word{1}};
    save_frobenius(endomorphism_frobenius(ising, sigma),
                   dir + "/ising-endo.alg");

    // one tau-cube F entry scaled: loads cleanly, pentagon fails
    CategoryData bad = make_fibonacci();
    bad.F.at(CategoryData::fkey(1, 1, 1, 1, 0, 0, 0, 0, 0, 0)) *=
        Scalar(1.01L);
    save_category(bad, dir + "/fibonacci-badF.cat");

    std::cout << "fixtures written to " << dir << "\n";
    return 0;
}
