#include "doctest.h"

#include "edim/encoders.hpp"
#include "edim/error.hpp"
#include "edim/generate.hpp"
#include "edim/invariants.hpp"

#include <functional>
#include <random>

using namespace edim;

namespace {

std::vector<Rat> rats(std::initializer_list<const char*> xs) {
    std::vector<Rat> out;
    for (auto* x : xs) out.push_back(Rat::parse(x));
    return out;
}

QuaternionElement scalar(long v) { return QuaternionElement::scalar(v); }

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const AlgebraError& e) {
        return e.code();
    }
    FAIL("no AlgebraError raised");
    return ErrorCode::InvalidInput;
}

InvolutiveAlgebra tensor(const QuaternionAlgebra& Q1, const RatMatrix& s1, const QuaternionAlgebra& Q2,
                         const RatMatrix& s2) {
    auto A1 = quaternion_structure(Q1);
    auto A2 = quaternion_structure(Q2);
    return tensor_with_involutions(A1, LinearInvolution(A1, s1), A2, LinearInvolution(A2, s2));
}

}  // namespace

TEST_CASE("hermitian encoder") {
    QuaternionAlgebra H(Rat(-1), Rat(-1));
    auto w1 = encode_hermitian(HermitianForm::diagonal(H, 1, {scalar(1), scalar(3), scalar(-2)})).witness;
    CHECK(w1.params == rats({"-1", "-1", "3", "-2"}));
    auto w2 = encode_hermitian(HermitianForm::diagonal(H, 1, {scalar(2), scalar(3), scalar(5)})).witness;
    CHECK(w2.params == rats({"-1", "-1", "3/2", "5/2"}));

    QMatrix g(3);
    g(0, 0) = scalar(1);
    g(0, 1) = QuaternionElement{{1, 1, 0, 0}};
    g(1, 0) = canonical_involution(g(0, 1));
    g(1, 2) = H.j();
    g(2, 1) = -H.j();
    g(2, 2) = scalar(4);
    HermitianForm h(H, 1, g);
    auto r = encode_hermitian(h);
    CHECK(r.witness.params.size() == 4);
    CHECK(r.certificate.all_pass());
    bool has_adjoint = false;
    for (auto& c : r.certificate.checks) has_adjoint = has_adjoint || c.name == "adjoint_on_generators";
    CHECK(has_adjoint);
    for (const char* l : {"3", "-2/7", "11/5"}) CHECK(encode_hermitian(h.scaled(Rat::parse(l))).witness == r.witness);
    CHECK(compare_invariants({Category::QHPlus, h}, decode(r.witness)).all_pass());
}

TEST_CASE("skew encoder") {
    QuaternionAlgebra H(Rat(-1), Rat(-1));
    auto r = encode_skew(HermitianForm::diagonal(H, -1, {H.i(), H.j(), H.k()}));
    CHECK(r.witness.params == rats({"-1", "-1", "0", "0", "0", "1"}));

    auto r2 = encode_skew(HermitianForm::diagonal(H, -1, {H.i(), H.i() + H.j(), H.k()}));
    CHECK(r2.witness.params == rats({"-1", "-1", "1", "0", "0", "1"}));

    auto r3 = encode_skew(HermitianForm::diagonal(H, -1, {H.i(), H.i() * Rat(2), H.j()}));
    CHECK(r3.witness.params.size() == 6);
    CHECK(r3.witness.meta.at("repair") == "permutation");
    CHECK(r3.witness.params == rats({"-1", "-1", "0", "2", "0", "0"}));

    auto r4 = encode_skew(HermitianForm::diagonal(H, -1, {H.i(), H.i() * Rat(2), H.i() * Rat(3)}), {5});
    CHECK(r4.witness.params.size() == 6);
    CHECK(r4.witness.meta.at("repair") != "none");
    CHECK(r4.certificate.all_pass());

    auto dec = decode(Witness{Category::QHMinus, 3, rats({"-1", "-1", "0", "0", "0", "1"}), {}});
    const auto& h = std::get<HermitianForm>(dec.payload);
    CHECK(h.algebra() == H);
    CHECK(h.entries() == std::vector<QuaternionElement>{H.i(), H.j(), H.k()});

    CHECK(code_of([] { decode(Witness{Category::QHMinus, 3, rats({"1", "-1", "1", "0", "0", "1"}), {}}); }) ==
          ErrorCode::WitnessInvalid);
    CHECK(code_of([] { decode(Witness{Category::QHMinus, 3, rats({"1", "-1", "1"}), {}}); }) ==
          ErrorCode::WitnessInvalid);
}

TEST_CASE("skew encoder on split algebras with isotropic vectors") {
    QuaternionAlgebra M(Rat(1), Rat(1));
    // q - c p is isotropic for p = i, q = j + k; the next slot is used.
    auto r = encode_skew(HermitianForm::diagonal(M, -1, {M.i(), M.j() + M.k() * Rat(2), M.j()}));
    CHECK(r.certificate.all_pass());
    CHECK(r.witness.params.size() == 6);
}

TEST_CASE("trivial-discriminant encoder") {
    QuaternionAlgebra H(Rat(-1), Rat(-1));
    auto h = HermitianForm::diagonal(H, -1, {H.i(), H.j(), H.k()});
    auto r = encode_skew_trivial_disc(h);
    CHECK(r.witness.params == rats({"-1", "-1", "0", "0", "0"}));
    CHECK(r.witness.meta.at("t_last") == "1");
    CHECK(encode_skew_trivial_disc(h.scaled(Rat(3))).witness == r.witness);
    CHECK(encode_skew_trivial_disc(h.scaled(Rat::parse("-5/2"))).witness == r.witness);

    QuaternionAlgebra Q(Rat(-1), Rat(-5));
    CHECK(code_of([&] { encode_skew_trivial_disc(HermitianForm::diagonal(Q, -1, {Q.i(), Q.i(), Q.j()})); }) ==
          ErrorCode::DiscNotTrivial);

    auto w = r.witness;
    w.meta["t_last"] = "2";
    CHECK(code_of([&] { decode(w); }) == ErrorCode::WitnessInvalid);
    w.meta.erase("t_last");
    CHECK(code_of([&] { decode(w); }) == ErrorCode::WitnessInvalid);

    for (std::size_t n : {3u, 5u}) {
        auto insts = generate({Category::QHMinusDisc1, n, 10, 3, 20});
        std::mt19937_64 rng(2);
        for (auto& inst : insts) {
            const auto& f = std::get<HermitianForm>(inst.payload);
            auto base = encode_skew_trivial_disc(f, {1});
            CHECK(base.witness.params.size() == 3 * n - 4);
            long num = long(rng() % 19) - 9;
            Rat lambda(Int(num == 0 ? 7 : num), Int(long(rng() % 5) + 1));
            CHECK(encode_skew_trivial_disc(f.scaled(lambda), {1}).witness == base.witness);
        }
    }
}

TEST_CASE("pgo4 encoder") {
    EtaleQuadratic L(Rat(5));
    auto w1 = encode_pgo4(EtaleQuaternionAlgebra{L, {Rat(2), Rat(1)}, {Rat(1), Rat(1)}}).witness;
    CHECK(w1.params == rats({"2", "1", "1", "5"}));
    auto w2 = encode_pgo4(EtaleQuaternionAlgebra{L, {Rat(2), Rat(1)}, {Rat(1), Rat(2)}}).witness;
    CHECK(w2.params == rats({"2", "1/2", "1", "20"}));
    auto w3 = encode_pgo4(EtaleQuaternionAlgebra{L, {Rat(3), Rat(0)}, {Rat(7), Rat(0)}}).witness;
    CHECK(w3.params == rats({"3", "0", "21", "980"}));
    CHECK(w3.meta.at("route") == "norm");
    auto w4 = encode_pgo4(EtaleQuaternionAlgebra{L, {Rat(3), Rat(0)}, {Rat(7), Rat(2)}}).witness;
    CHECK(w4.params == rats({"3", "0", "7", "20"}));
    auto w5 = encode_pgo4(EtaleQuaternionAlgebra{L, {Rat(3), Rat(1)}, {Rat(7), Rat(0)}}).witness;
    CHECK(w5.meta.at("route") == "swap");

    QuaternionPair pair{QuaternionAlgebra(Rat(-1), Rat(-1)), QuaternionAlgebra(Rat(2), Rat(3))};
    auto rp = encode_pgo4(pair);
    CHECK(rp.witness.meta.at("shape") == "SPLIT");
    CHECK(compare_invariants({Category::A12, pair}, decode(rp.witness)).all_pass());
    QuaternionPair same{QuaternionAlgebra(Rat(-1), Rat(3)), QuaternionAlgebra(Rat(2), Rat(3))};
    auto rs = encode_pgo4(same);
    CHECK(rs.witness.meta.at("route") == "rescale");
    CHECK(compare_invariants({Category::A12, same}, decode(rs.witness)).all_pass());

    CHECK(code_of([] { decode(Witness{Category::A12, 2, rats({"1", "1", "2", "1"}), {}}); }) ==
          ErrorCode::WitnessInvalid);
    CHECK(code_of([] { decode(Witness{Category::A12, 2, rats({"1", "1", "2", "0"}), {}}); }) ==
          ErrorCode::WitnessInvalid);
}

TEST_CASE("c1 encoder") {
    CHECK(encode_c1(QuaternionAlgebra(Rat(-1), Rat(-1))).witness.params == rats({"-1", "-1"}));
    CHECK(encode_c1(QuaternionAlgebra(Rat(1), Rat(1))).witness.params == rats({"1", "1"}));
    for (auto& inst : generate({Category::C1, 1, 20, 4, 20})) {
        auto r = encode(inst);
        CHECK(r.witness.params.size() == 2);
        CHECK(compare_invariants(inst, decode(r.witness)).all_pass());
    }
}

TEST_CASE("symplectic decomposition") {
    QuaternionAlgebra H(Rat(-1), Rat(-1)), Q2(Rat(-1), Rat(-3));
    auto sigma0 = orthogonal_involution_matrix(H, H.k());
    auto A = tensor(H, sigma0, Q2, canonical_involution_matrix());
    auto dec = decompose_symplectic_deg4(A);
    CHECK(dec.branch == SymplecticDecomposition::Branch::Division);
    CHECK(dec.certificate.all_pass());
    CHECK(quaternion_isomorphic(QuaternionAlgebra(dec.x, dec.y), H));
    CHECK(quaternion_isomorphic(QuaternionAlgebra(dec.z2, dec.w2), Q2));
    std::size_t named = 0;
    for (auto& c : dec.certificate.checks)
        for (auto* n : {"sigma(i0)=i0", "sigma(j)=j", "sigma(i0j)=-i0j", "i0j=-ji0", "Q'_centralizes_Q", "sigma|Q'=gamma"})
            named += c.name == n && c.pass;
    CHECK(named == 6);

    // Factor order does not matter: the symplectic factor is found either way.
    auto swapped = decompose_symplectic_deg4(tensor(Q2, canonical_involution_matrix(), H, sigma0));
    CHECK(quaternion_isomorphic(QuaternionAlgebra(swapped.x, swapped.y), H));
    CHECK(quaternion_isomorphic(QuaternionAlgebra(swapped.z2, swapped.w2), Q2));

    auto w = encode_c2(A).witness;
    CHECK(w.params.size() == 4);
    auto back = decode(w);
    const auto& ia = std::get<InvolutiveAlgebra>(back.payload);
    CHECK(involution_type(ia.algebra, ia.involution) == InvolutionType::Symplectic);

    auto gg = tensor(H, canonical_involution_matrix(), Q2, canonical_involution_matrix());
    CHECK(code_of([&] { decompose_symplectic_deg4(gg); }) == ErrorCode::NotSymplectic);

    QuaternionAlgebra M(Rat(1), Rat(1));
    auto S = tensor(M, orthogonal_involution_matrix(M, M.k()), Q2, canonical_involution_matrix());
    auto ds = decompose_symplectic_deg4(S);
    CHECK(ds.branch == SymplecticDecomposition::Branch::Split);
    REQUIRE(ds.zero_divisor.has_value());
    CHECK(QuaternionAlgebra(ds.x, ds.y).square(*ds.zero_divisor).is_zero());
    auto ws = encode_c2(S).witness;
    CHECK(ws.params[0] == Rat(1));
    CHECK(ws.meta.at("x") == "1");
    CHECK(compare_invariants({Category::C2, S}, decode(ws)).all_pass());
}

TEST_CASE("symplectic decomposition after a change of basis") {
    QuaternionAlgebra Q1(Rat(-2), Rat(5)), Q2(Rat(3), Rat(-7));
    auto A = tensor(Q1, orthogonal_involution_matrix(Q1, Q1.i() + Q1.j()), Q2, canonical_involution_matrix());
    std::mt19937_64 rng(17);
    for (int it = 0; it < 3; ++it) {
        RatMatrix B = RatMatrix::identity(16);
        for (int e = 0; e < 12; ++e) {
            std::size_t r = rng() % 16, c = 1 + rng() % 15;
            if (r < c) B(r, c) = Rat(long(rng() % 5) - 2);
        }
        auto moved = change_basis(A, B);
        auto dec = decompose_symplectic_deg4(moved, {std::uint64_t(it)});
        CHECK(dec.certificate.all_pass());
        auto brauer = ramification_set(QuaternionAlgebra(dec.x, dec.y)) ^ ramification_set(QuaternionAlgebra(dec.z2, dec.w2));
        CHECK(brauer == (ramification_set(Q1) ^ ramification_set(Q2)));
    }
}

TEST_CASE("round trip on generated instances") {
    for (auto cat : {Category::QHPlus, Category::QHMinus, Category::QHMinusDisc1, Category::A12, Category::C2,
                     Category::C1}) {
        auto insts = generate({cat, 3, 15, 11, 20});
        for (auto& inst : insts) {
            auto r = encode(inst, {2});
            CHECK(r.witness.params.size() == witness_length(cat, inst.n()));
            CHECK(r.certificate.all_pass());
            auto cmp = compare_invariants(inst, decode(r.witness), {2});
            CHECK_MESSAGE(cmp.all_pass(), category_tag(cat));
        }
    }
}

TEST_CASE("generator is deterministic and respects category invariants") {
    auto a = generate({Category::QHMinus, 3, 10, 7, 20});
    auto b = generate({Category::QHMinus, 3, 10, 7, 20});
    for (std::size_t k = 0; k < a.size(); ++k)
        CHECK(std::get<HermitianForm>(a[k].payload).gram() == std::get<HermitianForm>(b[k].payload).gram());
    for (auto& inst : generate({Category::C2, 1, 5, 9, 20})) {
        const auto& ia = std::get<InvolutiveAlgebra>(inst.payload);
        CHECK(involution_type(ia.algebra, ia.involution) == InvolutionType::Symplectic);
    }
    for (auto& inst : generate({Category::QHMinusDisc1, 5, 10, 9, 20})) {
        auto dz = diagonalize_form(std::get<HermitianForm>(inst.payload));
        CHECK(disc_skew(dz.form).is_trivial());
    }
    CHECK(code_of([] { generate({Category::QHMinusDisc1, 4, 1, 0, 20}); }) == ErrorCode::InvalidInput);
}
