#include <doctest.h>

#include <random>

#include <boost/multiprecision/cpp_int.hpp>

#include "fiat/ecies.hpp"
#include "fiat/errors.hpp"
#include "fiat/mimc.hpp"
#include "fiat/poseidon.hpp"

using namespace fiat;

namespace {

Fe fe(const char* dec) { return Fe::from_decimal(dec); }

std::vector<Fe> fes(std::initializer_list<uint64_t> vs) {
    std::vector<Fe> out;
    for (uint64_t v : vs) out.push_back(Fe::from_u64(v));
    return out;
}

// Test-only affine double-and-add over bignum arithmetic, independent of the
// library's field and extended-coordinate code paths. Plain value semantics
// (expression templates off).
namespace oracle {
namespace mp = boost::multiprecision;
using Big = mp::number<mp::cpp_int_backend<>, mp::et_off>;

const Big P(Fe::modulus_decimal());
const Big A(168700), D(168696);

Big norm(Big v) { return ((v % P) + P) % P; }

Big inv(const Big& x) { return mp::powm(norm(x), Big(P - 2), P); }

struct Pt {
    Big x, y;
};

Pt add(const Pt& p, const Pt& q) {
    Big lam = norm(D * p.x % P * q.x % P * p.y % P * q.y);
    Big x3 = norm((p.x * q.y + p.y * q.x) % P * inv(Big(1 + lam)));
    Big y3 = norm((p.y * q.y - A * p.x % P * q.x) % P * inv(norm(Big(1 - lam))));
    return {x3, y3};
}

Pt mul(Big k, Pt p) {
    Pt acc{0, 1};
    while (k > 0) {
        if ((k & 1) != 0) acc = add(acc, p);
        p = add(p, p);
        k >>= 1;
    }
    return acc;
}

}  // namespace oracle

}  // namespace

TEST_CASE("poseidon permutation matches the reference oracle") {
    auto out0 = poseidon_permute({Fe::zero(), Fe::zero(), Fe::zero()});
    CHECK(out0[0] ==
          fe("10698148814335511413940754474554853872490376607663925038419721191680109112807"));
    CHECK(out0[1] ==
          fe("4432013255266945584624841408533759212531941062999722155971008856599224680029"));
    CHECK(out0[2] ==
          fe("20016943512067981889855199017105359233206213736801123338069156727642185066183"));

    auto out012 = poseidon_permute({Fe::zero(), Fe::one(), Fe::from_u64(2)});
    CHECK(out012[0] ==
          fe("14701277557012599499502270970203085398749099377616312056838898184064915179157"));
    CHECK(out012[1] ==
          fe("1022857707512200081551823103855168527389467917628730467756665620604795510122"));
    CHECK(out012[2] ==
          fe("616084159512595398926389594736488394001630185738214929644299655006098159153"));
}

TEST_CASE("poseidon sponge matches the reference oracle") {
    CHECK(poseidon_hash({}) ==
          fe("10698148814335511413940754474554853872490376607663925038419721191680109112807"));
    CHECK(poseidon_hash(fes({0})) ==
          fe("16219539175219987935831003938164361075826721118140558532180664451196468586298"));
    CHECK(poseidon_hash(fes({1})) ==
          fe("10864531108326331496197319350558342111650722070578672869187952490529283000669"));
    CHECK(poseidon_hash(fes({1, 2})) ==
          fe("13229067705267975964062016731858241846607710935127293528518568089490491327468"));
    CHECK(poseidon_hash(fes({1, 2, 3})) ==
          fe("315543156791966197924336091252534906759693096059285437201856497863393023916"));
    CHECK(poseidon_hash(fes({1, 2, 3, 4})) ==
          fe("18391432951295712388068263345539059839978710183123800151008909821662265157670"));
    CHECK(poseidon_hash(fes({5, 4, 3, 2, 1})) ==
          fe("8635043571561813295533032496578744825841048095380409041539446633940811647683"));
    CHECK(poseidon_hash(fes({1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11})) ==
          fe("16383208641702497893224710211337001340113350730627786502361196687685403697043"));
    CHECK(poseidon_hash({Fe::from_i128(-1), Fe::from_i128(-2)}) ==
          fe("13476253849159414801343949939587829121453305956895575209657059534410746922696"));
}

TEST_CASE("poseidon avalanche on single-element flips") {
    std::mt19937_64 rng(101);
    std::vector<Fe> base;
    for (int i = 0; i < 8; ++i) base.push_back(Fe::from_u64(rng()));
    Fe digest = poseidon_hash(base);
    for (int trial = 0; trial < 10000; ++trial) {
        auto mutated = base;
        mutated[rng() % mutated.size()] += Fe::from_u64(1 + rng() % 1000);
        CHECK(poseidon_hash(mutated) != digest);
    }
}

TEST_CASE("mimc matches the reference oracle") {
    CHECK(mimc_prf(Fe::zero(), Fe::zero()) ==
          fe("5627053150330741784965453202981704355893679187612146559409772785750034197183"));
    CHECK(mimc_prf(Fe::zero(), Fe::one()) ==
          fe("3314262483920084670583227993102233345962789360087721624626265342353450153416"));
    CHECK(mimc_prf(Fe::zero(), Fe::from_u64(2)) ==
          fe("19193376744525318978762612088416482626204504970394070476700606427396573272579"));
    CHECK(mimc_prf(Fe::zero(), Fe::from_u64(3)) ==
          fe("17271487380428319328246224278291193472803242383328060507543427269963199739702"));
    CHECK(mimc_prf(Fe::one(), Fe::zero()) ==
          fe("21211802518963371069058868749902384118428168793251742700506362139088214965023"));
    CHECK(mimc_prf(Fe::from_u64(12345), Fe::from_u64(678)) ==
          fe("3676511753232385263103907922170231250521662805232315799822084694155688632390"));
    CHECK(mimc_prf(Fe::from_i128(-1), Fe::from_i128(-1)) ==
          fe("18126107357743316176066055602688606935331976601038095260383527700563148637522"));
}

TEST_CASE("mimc determinism and key separation") {
    std::mt19937_64 rng(7);
    Fe k1 = Fe::from_u64(rng()), k2 = Fe::from_u64(rng());
    Fe idx = Fe::from_u64(3);
    CHECK(mimc_prf(k1, idx) == mimc_prf(k1, idx));
    for (int i = 0; i < 1000; ++i) {
        Fe a = Fe::from_u64(rng()), b = Fe::from_u64(rng());
        if (a == b) continue;
        Fe x = Fe::from_u64(rng());
        CHECK(mimc_prf(a, x) != mimc_prf(b, x));
    }
    (void)k2;
}

TEST_CASE("baby jubjub group structure") {
    const JubPoint& g = jub_generator();
    CHECK(jub_on_curve(g));
    CHECK(jub_in_subgroup(g));
    CHECK(jub_mul(jub_subgroup_order(), g).is_identity());

    // frozen vectors from the reference oracle
    JubPoint g2 = jub_mul(U256::from_u64(2), g);
    CHECK(g2.x ==
          fe("10031262171927540148667355526369034398030886437092045105752248699557385197826"));
    CHECK(g2.y ==
          fe("633281375905621697187330766174974863687049529291089048651929454608812697683"));
    CHECK(jub_add(g, g) == g2);
    JubPoint g3 = jub_mul(U256::from_u64(3), g);
    CHECK(g3.x ==
          fe("2763488322167937039616325905516046217694264098671987087929565332380420898366"));
    CHECK(g3 == jub_add(g2, g));
    JubPoint gd = jub_mul(U256::from_u64(0xDEADBEEFull), g);
    CHECK(gd.x ==
          fe("7758610459337775183122170217227777247868116489802474288959732041856140937654"));
    CHECK(gd.y ==
          fe("17228531142565848024487588362706728361825314849865839793729785540467957722578"));

    std::mt19937_64 rng(11);
    for (int i = 0; i < 20; ++i) {
        JubPoint p = jub_mul(jub_random_scalar(rng), g);
        JubPoint q = jub_mul(jub_random_scalar(rng), g);
        JubPoint r = jub_mul(jub_random_scalar(rng), g);
        CHECK(jub_add(jub_add(p, q), r) == jub_add(p, jub_add(q, r)));
        CHECK(jub_add(p, JubPoint::identity()) == p);
        JubPoint neg{p.x.neg(), p.y};
        CHECK(jub_add(p, neg).is_identity());
    }
}

TEST_CASE("ecdh agrees with an independent double-and-add oracle") {
    namespace mp = boost::multiprecision;
    const JubPoint& g = jub_generator();
    oracle::Big ska("1234567890123456789012345678901234567890");
    oracle::Pt og{oracle::Big(g.x.to_decimal()), oracle::Big(g.y.to_decimal())};
    oracle::Pt opk = oracle::mul(ska, og);
    CHECK(opk.x.str() ==
          "2390254713070255989319085409741733535856751730620877964421039371149382899586");

    U256 sk_a = U256::from_decimal("1234567890123456789012345678901234567890");
    U256 sk_b = U256::from_decimal("9876543210987654321098765432109876543210");
    JubPoint pk_a = jub_mul(sk_a, g);
    JubPoint pk_b = jub_mul(sk_b, g);
    CHECK(pk_a.x == fe(opk.x.str().c_str()));
    CHECK(ecdh(sk_a, pk_b) ==
          fe("13197161044798319630271192244636857534441102128536991598172843584992933095704"));
    CHECK(ecdh(sk_a, pk_b) == ecdh(sk_b, pk_a));
    CHECK(ecdh(U256::from_u64(1), pk_b) == pk_b.x);

    std::mt19937_64 rng(13);
    for (int i = 0; i < 100; ++i) {
        KeyPair a = jub_keygen(rng), b = jub_keygen(rng);
        CHECK(ecdh(a.sk, b.pk) == ecdh(b.sk, a.pk));
    }

    JubPoint bogus{Fe::from_u64(2), Fe::from_u64(3)};
    CHECK_THROWS_AS(ecdh(sk_a, bogus), Error);
}

TEST_CASE("ecies round trip and semantic-security smoke") {
    std::mt19937_64 rng(17);
    KeyPair kp = jub_keygen(rng);

    std::vector<Fe> pt;
    for (int i = 0; i < 50; ++i) pt.push_back(Fe::from_u64(rng()));
    U256 esk = jub_random_scalar(rng);
    Ciphertext c = ecies_encrypt(kp.pk, pt, esk);
    CHECK(ecies_decrypt(kp.sk, c) == pt);

    Ciphertext c2 = ecies_encrypt(kp.pk, pt, jub_random_scalar(rng));
    CHECK(!(c2 == c));

    // single zero element: body is exactly the first keystream value
    U256 esk3 = jub_random_scalar(rng);
    Ciphertext c3 = ecies_encrypt(kp.pk, {Fe::zero()}, esk3);
    Fe shared = ecdh(esk3, kp.pk);
    CHECK(c3.body[0] == mimc_prf(shared, Fe::zero()));
    CHECK_THROWS_AS(ecies_encrypt(kp.pk, {}, esk3), Error);
}
