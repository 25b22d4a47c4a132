#include "jordan/group_data.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

using namespace jordan;

TEST(MatrixOrder, Examples)
{
  EXPECT_EQ(order_matrix_group(MatrixKind::GL, 2, 2), 6);
  EXPECT_EQ(order_matrix_group(MatrixKind::GL, 3, 2), 168);
  EXPECT_EQ(order_matrix_group(MatrixKind::Sp, 4, 2), 720);
  EXPECT_EQ(order_matrix_group(MatrixKind::GL, 2, 3), 48);
  EXPECT_EQ(order_matrix_group(MatrixKind::SU, 2, 3), 24);
  EXPECT_EQ(order_matrix_group(MatrixKind::U, 1, 3), 4);
}

TEST(MatrixOrder, BruteForceMatchesFormula)
{
  struct Case {
    MatrixKind kind;
    unsigned dim, q;
  };
  for (Case c : {Case{MatrixKind::GL, 1, 2}, Case{MatrixKind::GL, 2, 2}, Case{MatrixKind::GL, 3, 2},
                 Case{MatrixKind::GL, 1, 3}, Case{MatrixKind::GL, 2, 3}, Case{MatrixKind::Sp, 2, 2},
                 Case{MatrixKind::Sp, 4, 2}, Case{MatrixKind::Sp, 2, 3}}) {
    BigInt formula = order_matrix_group(c.kind, c.dim, c.q);
    EXPECT_EQ(brute_force_matrix_order(c.kind, c.dim, c.q), formula) << to_string(c.kind) << c.dim << "," << c.q;
    EXPECT_EQ(BigInt(static_cast<unsigned long>(oracle::count_matrices(c.dim, c.q, c.kind == MatrixKind::Sp))),
              formula);
  }
}

TEST(MatrixOrder, SlDividesGl)
{
  for (unsigned long n = 1; n <= 6; ++n)
    for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9}) {
      BigInt gl = order_matrix_group(MatrixKind::GL, n, q);
      BigInt sl = order_matrix_group(MatrixKind::SL, n, q);
      EXPECT_EQ(sl * BigInt(static_cast<unsigned long>(q - 1)), gl);
    }
}

TEST(MatrixOrder, RejectsBadField)
{
  EXPECT_THROW(order_matrix_group(MatrixKind::GL, 2, 6), Error);
  EXPECT_THROW(order_matrix_group(MatrixKind::Sp, 3, 2), Error);
  EXPECT_THROW(brute_force_matrix_order(MatrixKind::SL, 2, 2), Error);
}

TEST(PrimePower, Factorisation)
{
  EXPECT_EQ(prime_power(8)->p, 2u);
  EXPECT_EQ(prime_power(8)->f, 3u);
  EXPECT_EQ(prime_power(49)->p, 7u);
  EXPECT_FALSE(prime_power(12));
  EXPECT_FALSE(prime_power(1));
}

TEST(SimpleOrder, Examples)
{
  EXPECT_EQ(order_simple(GroupSpec::alternating(5)), 60);
  EXPECT_EQ(order_simple(GroupSpec::sporadic("J2")), 604800);
  EXPECT_EQ(order_simple(GroupSpec::psl(2, 7)), 168);
  EXPECT_EQ(order_simple(GroupSpec::psl(4, 3)), 6065280);
  EXPECT_EQ(order_simple(GroupSpec::psu(3, 3)), 6048);
  EXPECT_EQ(order_simple(GroupSpec::psp(4, 3)), 25920);
  EXPECT_EQ(order_simple(GroupSpec::exceptional(Family::Suzuki, 8)), 29120);
  EXPECT_EQ(order_simple(GroupSpec::exceptional(Family::G2, 3)), 4245696);
  EXPECT_EQ(order_simple(GroupSpec::omega_plus(8, 2)), 174182400);
  EXPECT_EQ(order_simple(GroupSpec::omega_minus(8, 2)), 197406720);
  EXPECT_EQ(order_simple(GroupSpec::omega_odd(7, 3)), 4585351680);
}

TEST(SimpleOrder, KnownIsomorphismsAgree)
{
  for (const auto& [a, b] : known_isomorphisms())
    EXPECT_EQ(order_simple(a), order_simple(b)) << a.to_string() << " vs " << b.to_string();
  EXPECT_EQ(order_simple(GroupSpec::psl(2, 4)), 60);
  EXPECT_EQ(order_simple(GroupSpec::psl(2, 5)), 60);
}

TEST(SimpleOrder, AlternatingIsHalfFactorial)
{
  for (unsigned long m = 5; m <= 40; ++m)
    EXPECT_EQ(order_simple(GroupSpec::alternating(m)) * 2, oracle::naive_factorial(m));
}

TEST(OutOrder, Examples)
{
  EXPECT_EQ(out_order(GroupSpec::psl(2, 7)), 2);
  EXPECT_EQ(out_order(GroupSpec::psl(2, 8)), 3);
  EXPECT_EQ(out_order(GroupSpec::sporadic("Suz")), 2);
  EXPECT_EQ(out_order(GroupSpec::alternating(7)), 2);
}

TEST(GroupSpec, RejectsNonSimple)
{
  EXPECT_THROW(GroupSpec::alternating(4), Error);
  EXPECT_THROW(GroupSpec::psl(2, 3), Error);
  EXPECT_THROW(GroupSpec::psl(2, 6), Error);
  EXPECT_THROW(GroupSpec::psu(3, 2), Error);
  EXPECT_THROW(GroupSpec::psp(4, 2), Error);
  EXPECT_THROW(GroupSpec::psp(5, 3), Error);
  EXPECT_THROW(GroupSpec::exceptional(Family::Suzuki, 4), Error);
  EXPECT_THROW(GroupSpec::exceptional(Family::Ree2G2, 9), Error);
  EXPECT_THROW(GroupSpec::exceptional(Family::G2, 2), Error);
}

TEST(Sporadic, Records)
{
  const SporadicRecord& j2 = sporadic_record("J2");
  EXPECT_EQ(j2.order, 604800);
  EXPECT_EQ(j2.out_order, 2u);
  EXPECT_EQ(j2.min_proj_degree, 6u);
  EXPECT_EQ(sporadic_record("Suz").min_proj_degree, 12u);
  try {
    sporadic_record("Foo");
    FAIL() << "expected UnknownSporadic";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnknownSporadic);
  }
}

TEST(Sporadic, TableInvariants)
{
  const auto& rows = DataTables::embedded().sporadic();
  ASSERT_EQ(rows.size(), 26u);
  for (const SporadicRecord& r : rows) {
    EXPECT_LE(r.out_order, 2u) << r.name;
    EXPECT_GE(r.min_proj_degree, 2u) << r.name;
    EXPECT_FALSE(r.source.empty()) << r.name;
  }
}

TEST(DataTables, LoadMatchesEmbedded)
{
  DataTables disk = DataTables::load(std::filesystem::path(JORDAN_SOURCE_DIR) / "data");
  EXPECT_EQ(disk.hashes(), DataTables::embedded().hashes());
  EXPECT_EQ(disk.sporadic().size(), 26u);
}

TEST(DataTables, MalformedRowsRejected)
{
  std::filesystem::path dir = std::filesystem::temp_directory_path() / "jordan_bad_tables";
  std::filesystem::create_directories(dir);
  std::filesystem::path src = std::filesystem::path(JORDAN_SOURCE_DIR) / "data";
  for (const char* f : {exceptional_file, inertia_file})
    std::filesystem::copy_file(src / f, dir / f, std::filesystem::copy_options::overwrite_existing);
  {
    std::ifstream in(src / sporadic_file);
    std::ofstream out(dir / sporadic_file);
    std::string line;
    while (std::getline(in, line)) {
      out << line << "\n";
      if (line.rfind("name,", 0) == 0)
        break;
    }
    out << "Bad,100,3,6,nowhere\n";
  }
  try {
    DataTables::load(dir);
    FAIL() << "expected DataFormat";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DataFormat);
  }
  std::filesystem::remove_all(dir);
}
