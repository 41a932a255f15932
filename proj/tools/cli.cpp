#include "cli.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "CLI11.hpp"

#include "ckc/angle_solver.hpp"
#include "ckc/chain.hpp"
#include "ckc/closure.hpp"
#include "ckc/cube_param.hpp"
#include "ckc/diagonal_space.hpp"
#include "ckc/errors.hpp"
#include "ckc/permute.hpp"
#include "ckc/rng.hpp"
#include "record_io.hpp"

namespace ckc::cli {

namespace {

LinkLengths make_links(const std::vector<double>& links, int unit) {
    if (unit > 0) {
        return LinkLengths(std::vector<double>(static_cast<std::size_t>(unit), 1.0));
    }
    if (links.empty()) {
        throw std::invalid_argument("provide --links or --unit-links");
    }
    return LinkLengths(links);
}

// output sink: --out file or the session stream
class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw std::invalid_argument("cannot open output file: " + path);
            os_ = &file_;
        } else {
            os_ = &fallback;
        }
    }
    std::ostream& os() { return *os_; }

private:
    std::ofstream file_;
    std::ostream* os_ = nullptr;
};

Record run_one_sample(const LinkLengths& links, std::uint64_t record_seed, double tol) {
    SeededRng rng(record_seed);
    DiagonalVector diag = sample_diagonals(links, rng);
    SphericalConfiguration sc = reconstruct(links, diag, rng);
    ClosedConfiguration cc = close(links, sc, tol);

    Record r;
    r.links = links.values();
    r.alpha = cc.angles.alphas();
    r.beta = cc.angles.betas();
    r.joints = cc.joints;
    r.diagonals = diag.values();
    r.cases.reserve(sc.cases.size());
    for (SolutionCase c : sc.cases) r.cases.emplace_back(to_string(c));
    r.residual = cc.residual;
    r.seed = record_seed;
    return r;
}

std::string record_csv_rows(const Record& r, long index) {
    std::string s;
    for (std::size_t j = 0; j < r.joints.size(); ++j) {
        s += std::to_string(index);
        s += ',';
        s += std::to_string(j);
        s += ',';
        s += fmt(r.joints[j].x);
        s += ',';
        s += fmt(r.joints[j].y);
        s += ',';
        s += fmt(r.joints[j].z);
        s += '\n';
    }
    return s;
}

struct SampleArgs {
    std::vector<double> links;
    int unit_links = 0;
    long count = 1;
    std::uint64_t seed = 0;
    double tol = -1.0;
    std::string out;
    std::string format = "json";
};

int cmd_sample(const SampleArgs& a, std::ostream& out) {
    LinkLengths links = make_links(a.links, a.unit_links);
    if (a.count < 1) throw std::invalid_argument("count must be >= 1");

    std::vector<std::string> blocks(static_cast<std::size_t>(a.count));
    bool csv = a.format == "csv";

    auto produce = [&](long i) {
        Record r = run_one_sample(links, mix_seed(a.seed, static_cast<std::uint64_t>(i)), a.tol);
        blocks[static_cast<std::size_t>(i)] =
            csv ? record_csv_rows(r, i) : to_json_line(r) + "\n";
    };

    unsigned hw = std::thread::hardware_concurrency();
    long workers = std::min<long>(hw ? static_cast<long>(hw) : 1, a.count);
    if (workers <= 1) {
        for (long i = 0; i < a.count; ++i) produce(i);
    } else {
        std::atomic<long> next{0};
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (long w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (;;) {
                    long i = next.fetch_add(1);
                    if (i >= a.count) return;
                    produce(i);
                }
            });
        }
        for (std::thread& t : pool) t.join();
    }

    Sink sink(a.out, out);
    if (csv) sink.os() << "config,joint,x,y,z\n";
    for (const std::string& b : blocks) sink.os() << b;
    return 0;
}

struct VerifyArgs {
    std::string in;
    double tol = -1.0;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
    std::ifstream in(a.in);
    if (!in) throw std::invalid_argument("cannot open input file: " + a.in);
    std::vector<Record> records = read_records(in);
    if (records.empty()) throw std::invalid_argument("no records in " + a.in);

    long ok = 0;
    for (std::size_t i = 0; i < records.size(); ++i) {
        const Record& r = records[i];
        LinkLengths links(r.links);
        JointAngles angles(r.alpha, r.beta);
        ResidualReport rep = verify(links, angles);
        double tol = a.tol >= 0.0 ? a.tol : 1e-9 * std::max(1.0, links.total());
        bool pass = rep.abs <= tol;
        if (pass) ++ok;
        out << "record " << i << " residual " << fmt(rep.abs)
            << " rel " << fmt(rep.rel) << (pass ? " ok" : " fail") << "\n";
    }
    out << "verified " << records.size() << " records, " << ok << " ok\n";
    return ok == static_cast<long>(records.size()) ? 0 : 2;
}

struct DiagspaceArgs {
    std::vector<double> links;
    int unit_links = 0;
    std::string out;
    int grid = 0;
    bool area = false;
    long mc_points = 1000000;
    std::uint64_t seed = 0;
};

int cmd_diagspace(const DiagspaceArgs& a, std::ostream& out) {
    LinkLengths links = make_links(a.links, a.unit_links);
    int n = links.n();
    Decomposition d = decompose(links);

    out << "n " << n << "\nlinks";
    for (double v : links.values()) out << ' ' << fmt(v);
    out << '\n';
    out << "P L_" << (n - 2) << " in [" << fmt(d.p_first().lo) << ", "
        << fmt(d.p_first().hi) << "]\n";
    for (int k = n - 3; k >= 2; --k) {
        out << "P L_" << k << " in [|L_" << (k + 1) << " - " << fmt(d.p_offset_link(k))
            << "|, L_" << (k + 1) << " + " << fmt(d.p_offset_link(k)) << "]\n";
    }
    for (int k = n - 2; k >= 2; --k) {
        out << "Q L_" << k << " in [" << fmt(d.q(k).lo) << ", " << fmt(d.q(k).hi)
            << "] raw [" << fmt(d.q_raw(k).lo) << ", " << fmt(d.q_raw(k).hi) << "]\n";
    }

    if (a.area) {
        if (n != 5) throw std::invalid_argument("--area needs a five-link chain");
        AreaEstimate est = mc_area5(links, a.mc_points, a.seed);
        out << "area " << fmt(est.area) << " stderr " << fmt(est.std_error)
            << " box " << fmt(est.box_area) << " hits " << est.hits
            << " points " << est.points << "\n";
    }

    if (a.grid > 0) {
        if (n > 8) throw std::invalid_argument("membership grids supported for n <= 8");
        int dims = n - 3;
        double total = std::pow(static_cast<double>(a.grid), dims);
        if (total > 2e7) throw std::invalid_argument("grid too fine; lower --grid");

        std::vector<Interval> box(static_cast<std::size_t>(dims));
        for (int k = 2; k <= n - 2; ++k) {
            Interval iv = d.q(k);
            if (k == n - 2) {
                iv.lo = std::max(iv.lo, d.p_first().lo);
                iv.hi = std::min(iv.hi, d.p_first().hi);
            }
            box[static_cast<std::size_t>(k - 2)] = iv;
        }

        Sink sink(a.out, out);
        for (int k = 2; k <= n - 2; ++k) {
            sink.os() << "L_" << k << (k < n - 2 ? "," : ",member\n");
        }
        std::vector<int> idx(static_cast<std::size_t>(dims), 0);
        DiagonalVector v(links, std::vector<double>(static_cast<std::size_t>(dims), 0.0));
        for (;;) {
            for (int t = 0; t < dims; ++t) {
                const Interval& iv = box[static_cast<std::size_t>(t)];
                double x = iv.lo + (idx[static_cast<std::size_t>(t)] + 0.5) * iv.width() /
                                      static_cast<double>(a.grid);
                v.set(t + 2, x);
            }
            bool member = membership_zan_stein(links, v);
            for (int t = 0; t < dims; ++t) sink.os() << fmt(v.at(t + 2)) << ',';
            sink.os() << (member ? 1 : 0) << '\n';
            int t = 0;
            for (; t < dims; ++t) {
                int& i = idx[static_cast<std::size_t>(t)];
                if (++i < a.grid) break;
                i = 0;
            }
            if (t == dims) break;
        }
    }
    return 0;
}

struct GammaArgs {
    std::vector<double> links;
    long count = 100;
    std::uint64_t seed = 0;
    std::string out;
    bool force = false;
};

int cmd_gamma(const GammaArgs& a, std::ostream& out) {
    LinkLengths links = make_links(a.links, 0);
    int n = links.n();
    if (n < 4) throw std::invalid_argument("cube parametrization needs n >= 4");
    if (!a.force && !has_three_long_links(links).ok) {
        throw infeasible_error("chain lacks three long links (use --force to evaluate anyway)");
    }
    if (a.count < 1) throw std::invalid_argument("count must be >= 1");

    Sink sink(a.out, out);
    for (int k = 2; k <= n - 2; ++k) sink.os() << "s_" << k << ',';
    for (int k = 2; k <= n - 2; ++k) sink.os() << "U_" << k << ',';
    for (int k = 2; k <= n - 2; ++k) sink.os() << "L_" << k << ',';
    sink.os() << "member\n";

    SeededRng rng(a.seed);
    double eps = 1e-12 * links.total();
    for (long i = 0; i < a.count; ++i) {
        std::vector<double> sv(static_cast<std::size_t>(n - 3));
        for (double& s : sv) s = rng.uniform(-1.0, 1.0);
        CubePoint s(n, sv);
        UVector u = gamma(links, s, true);
        DiagonalVector l = from_u(links, u);
        bool member = membership_zan_stein(links, l, eps);
        for (int k = 2; k <= n - 2; ++k) sink.os() << fmt(s.at(k)) << ',';
        for (int k = 2; k <= n - 2; ++k) sink.os() << fmt(u.at(k)) << ',';
        for (int k = 2; k <= n - 2; ++k) sink.os() << fmt(l.at(k)) << ',';
        sink.os() << (member ? 1 : 0) << '\n';
    }
    return 0;
}

struct DirectionsArgs {
    std::vector<double> links;
    int unit_links = 0;
    std::uint64_t seed = 0;
    std::string out;
    std::string format = "csv";
};

int cmd_directions(const DirectionsArgs& a, std::ostream& out) {
    LinkLengths links = make_links(a.links, a.unit_links);
    int n = links.n();
    Record r = run_one_sample(links, mix_seed(a.seed, 0), -1.0);

    std::vector<Point3> dirs;
    dirs.reserve(static_cast<std::size_t>(n));
    for (int j = 0; j < n - 1; ++j) {
        Point3 e = r.joints[static_cast<std::size_t>(j + 1)] - r.joints[static_cast<std::size_t>(j)];
        dirs.push_back(e * (1.0 / e.norm()));
    }
    Point3 back = r.joints.front() - r.joints.back();
    dirs.push_back(back * (1.0 / back.norm()));

    Point3 weighted{0.0, 0.0, 0.0};
    for (int j = 0; j < n; ++j) {
        weighted = weighted + dirs[static_cast<std::size_t>(j)] * links.at(j + 1);
    }
    double balance = weighted.norm();

    Sink sink(a.out, out);
    if (a.format == "json") {
        sink.os() << "{\"directions\":[";
        for (std::size_t j = 0; j < dirs.size(); ++j) {
            if (j) sink.os() << ',';
            sink.os() << '[' << fmt(dirs[j].x) << ',' << fmt(dirs[j].y) << ','
                      << fmt(dirs[j].z) << ']';
        }
        sink.os() << "],\"balance\":" << fmt(balance) << "}\n";
    } else {
        sink.os() << "x,y,z\n";
        for (const Point3& u : dirs) {
            sink.os() << fmt(u.x) << ',' << fmt(u.y) << ',' << fmt(u.z) << '\n';
        }
        sink.os() << "# balance " << fmt(balance) << '\n';
    }
    return 0;
}

struct BenchArgs {
    std::vector<long> sizes{1000, 10000, 100000, 1000000};
    std::uint64_t seed = 0;
    int reps = 1;
};

int cmd_bench(const BenchArgs& a, std::ostream& out) {
    if (a.reps < 1) throw std::invalid_argument("reps must be >= 1");
    for (long n : a.sizes) {
        if (n < 4) throw std::invalid_argument("bench sizes must be >= 4");
        LinkLengths links(std::vector<double>(static_cast<std::size_t>(n), 1.0));
        double best = 0.0;
        double residual = 0.0;
        for (int rep = 0; rep < a.reps; ++rep) {
            SeededRng rng(mix_seed(a.seed, static_cast<std::uint64_t>(rep)));
            auto t0 = std::chrono::steady_clock::now();
            DiagonalVector diag = sample_diagonals(links, rng);
            SphericalConfiguration sc = reconstruct(links, diag, rng);
            ClosedConfiguration cc = close(links, sc);
            auto t1 = std::chrono::steady_clock::now();
            double sec = std::chrono::duration<double>(t1 - t0).count();
            if (rep == 0 || sec < best) best = sec;
            residual = cc.residual;
        }
        out << "n " << n << " seconds " << fmt(best) << " ns_per_joint "
            << fmt(best * 1e9 / static_cast<double>(n)) << " residual " << fmt(residual)
            << "\n";
    }
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("ckc");
    for (const std::string& s : args) argv.push_back(s.c_str());
    return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"closed kinematic chains with spherical joints: sample, verify, explore"};
    app.require_subcommand(1);

    SampleArgs sa;
    CLI::App* sample = app.add_subcommand("sample", "draw closed configurations");
    sample->add_option("--links", sa.links, "link lengths a_1,...,a_n")->delimiter(',');
    sample->add_option("--unit-links", sa.unit_links, "number of unit links")
        ->excludes(sample->get_option("--links"));
    sample->add_option("--count", sa.count, "number of configurations");
    sample->add_option("--seed", sa.seed, "base seed");
    sample->add_option("--tol", sa.tol, "closure gate override (absolute)");
    sample->add_option("--out", sa.out, "output path (default stdout)");
    sample->add_option("--format", sa.format, "json records or csv joints")
        ->check(CLI::IsMember({"json", "csv"}));

    VerifyArgs va;
    CLI::App* ver = app.add_subcommand("verify", "recompute closure residuals of records");
    ver->add_option("--in", va.in, "record file (JSON lines or array)")->required();
    ver->add_option("--tol", va.tol, "absolute residual tolerance");

    DiagspaceArgs da;
    CLI::App* dia = app.add_subcommand("diagspace", "describe the feasible diagonal space");
    dia->add_option("--links", da.links, "link lengths a_1,...,a_n")->delimiter(',');
    dia->add_option("--unit-links", da.unit_links, "number of unit links")
        ->excludes(dia->get_option("--links"));
    dia->add_option("--out", da.out, "grid output path");
    dia->add_option("--grid", da.grid, "membership grid resolution per axis");
    dia->add_flag("--area", da.area, "Monte-Carlo area (five-link chains)");
    dia->add_option("--mc-points", da.mc_points, "Monte-Carlo point count");
    dia->add_option("--seed", da.seed, "Monte-Carlo seed");

    GammaArgs ga;
    CLI::App* gam = app.add_subcommand("gamma", "evaluate the cube parametrization");
    gam->add_option("--links", ga.links, "link lengths a_1,...,a_n")->delimiter(',');
    gam->add_option("--count", ga.count, "random cube points");
    gam->add_option("--seed", ga.seed, "seed");
    gam->add_option("--out", ga.out, "output path");
    gam->add_flag("--force", ga.force, "evaluate without the three-long-link hypothesis");

    DirectionsArgs dira;
    CLI::App* dir = app.add_subcommand("directions", "unit link directions of one sample");
    dir->add_option("--links", dira.links, "link lengths a_1,...,a_n")->delimiter(',');
    dir->add_option("--unit-links", dira.unit_links, "number of unit links")
        ->excludes(dir->get_option("--links"));
    dir->add_option("--seed", dira.seed, "seed");
    dir->add_option("--out", dira.out, "output path");
    dir->add_option("--format", dira.format, "csv rows or one json object")
        ->check(CLI::IsMember({"json", "csv"}));

    BenchArgs ba;
    CLI::App* ben = app.add_subcommand("bench", "time the sampling pipeline");
    ben->add_option("--sizes", ba.sizes, "chain sizes")->delimiter(',');
    ben->add_option("--seed", ba.seed, "seed");
    ben->add_option("--reps", ba.reps, "repetitions per size (best kept)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (sample->parsed()) return cmd_sample(sa, out);
        if (ver->parsed()) return cmd_verify(va, out);
        if (dia->parsed()) return cmd_diagspace(da, out);
        if (gam->parsed()) return cmd_gamma(ga, out);
        if (dir->parsed()) return cmd_directions(dira, out);
        if (ben->parsed()) return cmd_bench(ba, out);
    } catch (const infeasible_error& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const not_spherical_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

} // namespace ckc::cli
