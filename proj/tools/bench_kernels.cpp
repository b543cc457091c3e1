// Times the row-parallel kernels (operator-matrix build, P-basis
// construction, dimension tables) in serial and OpenMP mode and checks that
// both modes produce identical results.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "bcnqkit/closedforms.hpp"
#include "bcnqkit/dimensions.hpp"
#include "bcnqkit/serialize.hpp"

using namespace bcnq;
using clock_type = std::chrono::steady_clock;

namespace {

template <typename F>
double time_once(F&& fn) {
    auto t0 = clock_type::now();
    fn();
    auto t1 = clock_type::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

struct Row {
    std::string name;
    double serial = 0;
    double openmp = 0;
    bool equal = false;
};

void print_rows(const std::vector<Row>& rows) {
    std::printf("%-34s %10s %10s %9s %s\n", "kernel", "serial[s]", "openmp[s]", "speedup", "equal");
    for (const Row& r : rows)
        std::printf("%-34s %10.4f %10.4f %8.2fx %s\n", r.name.c_str(), r.serial, r.openmp,
                    r.openmp > 0 ? r.serial / r.openmp : 0.0, r.equal ? "yes" : "NO");
}

}  // namespace

int main(int argc, char** argv) {
    int repeat = argc > 1 ? std::atoi(argv[1]) : 3;
    std::vector<Row> rows;

    {
        Partition bound({3, 0, 0}, 3);
        ParamPoint params = sample_generic_params(1, Family::mk, bound);
        OperatorMatrix serial_m, omp_m;
        Row row{"operator_matrix mk n=3 w=3", 0, 0, false};
        for (int r = 0; r < repeat; ++r) {
            row.serial += time_once([&] {
                serial_m = build_operator_matrix_up_to_weight(Family::mk, 3, 3, params, par::Mode::serial);
            });
            row.openmp += time_once([&] {
                omp_m = build_operator_matrix_up_to_weight(Family::mk, 3, 3, params, par::Mode::openmp);
            });
        }
        row.equal = to_json(serial_m) == to_json(omp_m);
        rows.push_back(row);
    }

    {
        Partition bound({4, 0}, 2);
        ParamPoint params = sample_generic_params(2, Family::mk, bound);
        Row row{"pbasis mk n=2 w=8", 0, 0, false};
        json serial_dump, omp_dump;
        for (int r = 0; r < repeat; ++r) {
            row.serial += time_once([&] {
                PBasis basis(Family::mk, params, 2, 8, par::Mode::serial);
                serial_dump = to_json(basis.polynomial(Partition({4, 4}, 2)));
            });
            row.openmp += time_once([&] {
                PBasis basis(Family::mk, params, 2, 8, par::Mode::openmp);
                omp_dump = to_json(basis.polynomial(Partition({4, 4}, 2)));
            });
        }
        row.equal = serial_dump == omp_dump;
        rows.push_back(row);
    }

    {
        ParamPoint params;
        params.t = Rat(1, 3);
        Row row{"dim_table padic n=3 d=8 w=9", 0, 0, false};
        std::vector<DimRecord> serial_recs, omp_recs;
        for (int r = 0; r < repeat; ++r) {
            row.serial += time_once(
                [&] { serial_recs = dim_table(Space::padic, 3, 8, params, 9, par::Mode::serial); });
            row.openmp += time_once(
                [&] { omp_recs = dim_table(Space::padic, 3, 8, params, 9, par::Mode::openmp); });
        }
        row.equal = serial_recs.size() == omp_recs.size();
        for (std::size_t i = 0; row.equal && i < serial_recs.size(); ++i)
            row.equal = to_json(serial_recs[i]) == to_json(omp_recs[i]);
        rows.push_back(row);
    }

    print_rows(rows);
    for (const Row& r : rows)
        if (!r.equal) return 1;
    return 0;
}
