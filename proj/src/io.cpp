#include "bridge/io.hpp"
#include "bridge/errors.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

namespace bridge {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string cable_csv(const CableProfile& profile) {
    std::ostringstream out;
    out << "x,s,s_prime,s_second,xi\n";
    for (int i = 0; i < profile.grid.size(); ++i)
        out << format_double(profile.grid.nodes[i]) << ','
            << format_double(profile.s[i]) << ','
            << format_double(profile.s_prime[i]) << ','
            << format_double(profile.s_second[i]) << ','
            << format_double(profile.xi[i]) << '\n';
    return out.str();
}

std::string basis_csv(const SpectralBasis& basis, Basis which) {
    const Eigen::MatrixXd& rows =
        which == Basis::Weighted ? basis.u_samples : basis.e_samples;
    const char* prefix = which == Basis::Weighted ? "u_" : "e_";
    std::ostringstream out;
    out << "x";
    for (int k = 0; k < basis.n_modes; ++k) out << ',' << prefix << (k + 1);
    out << '\n';
    for (int i = 0; i < basis.grid.size(); ++i) {
        out << format_double(basis.grid.nodes[i]);
        for (int k = 0; k < basis.n_modes; ++k)
            out << ',' << format_double(rows(k, i));
        out << '\n';
    }
    return out.str();
}

std::string eigenvalues_json(const SpectralBasis& basis) {
    std::string out = "[";
    for (int k = 0; k < basis.n_modes; ++k) {
        if (k) out += ", ";
        out += format_double(basis.lambda[k]);
    }
    out += "]\n";
    return out;
}

namespace {

void append_block(std::ostringstream& out, const Eigen::VectorXd& v) {
    for (int k = 0; k < v.size(); ++k) out << ',' << format_double(v[k]);
}

} // namespace

std::string trajectory_csv(const std::vector<ModalState>& snapshots) {
    if (snapshots.empty()) throw ParameterError("no snapshots to serialize");
    const int n = snapshots.front().n_modes();
    std::ostringstream out;
    out << "t";
    const char* blocks[] = {"p1_", "p2_", "y_", "th_",
                            "v_p1_", "v_p2_", "v_y_", "v_th_"};
    for (const char* b : blocks)
        for (int k = 1; k <= n; ++k) out << ',' << b << k;
    out << '\n';
    for (const ModalState& s : snapshots) {
        out << format_double(s.t);
        append_block(out, s.p1);
        append_block(out, s.p2);
        append_block(out, s.y);
        append_block(out, s.theta);
        append_block(out, s.v_p1);
        append_block(out, s.v_p2);
        append_block(out, s.v_y);
        append_block(out, s.v_theta);
        out << '\n';
    }
    return out.str();
}

std::string energy_csv(const std::vector<double>& times,
                       const std::vector<EnergyBreakdown>& energies) {
    if (times.size() != energies.size())
        throw ParameterError("energy series length mismatch");
    std::ostringstream out;
    out << "t,total_44,total_corrected,kinetic_deck_translation,"
           "kinetic_deck_torsion,kinetic_cables,bending,torsional_stiffness,"
           "cable_stretch_p1,cable_stretch_p2,cable_quadratic,cable_linear,"
           "cable_gravity,hanger_potential\n";
    for (size_t i = 0; i < times.size(); ++i) {
        const EnergyBreakdown& e = energies[i];
        out << format_double(times[i]) << ','
            << format_double(e.total_44) << ','
            << format_double(e.total_corrected) << ','
            << format_double(e.kinetic_deck_translation) << ','
            << format_double(e.kinetic_deck_torsion) << ','
            << format_double(e.kinetic_cables) << ','
            << format_double(e.bending) << ','
            << format_double(e.torsional_stiffness) << ','
            << format_double(e.cable_stretch_p1) << ','
            << format_double(e.cable_stretch_p2) << ','
            << format_double(e.cable_quadratic) << ','
            << format_double(e.cable_linear) << ','
            << format_double(e.cable_gravity) << ','
            << format_double(e.hanger_potential) << '\n';
    }
    return out.str();
}

std::string events_jsonl(const std::vector<SlackEvent>& events) {
    std::ostringstream out;
    for (const SlackEvent& ev : events)
        out << "{\"t\": " << format_double(ev.t)
            << ", \"node_index\": " << ev.node_index << ", \"row\": " << ev.row
            << ", \"direction\": \"" << (ev.became_slack ? "slack" : "taut")
            << "\"}\n";
    return out.str();
}

std::string force_compare_csv(const Grid& grid,
                              const Eigen::VectorXd& h_first_order,
                              const Eigen::VectorXd& h_timoshenko,
                              const Eigen::VectorXd& h_bvk) {
    std::ostringstream out;
    out << "x,h_first_order,h_timoshenko,h_bvk\n";
    for (int i = 0; i < grid.size(); ++i)
        out << format_double(grid.nodes[i]) << ','
            << format_double(h_first_order[i]) << ','
            << format_double(h_timoshenko[i]) << ','
            << format_double(h_bvk[i]) << '\n';
    return out.str();
}

std::uint64_t fnv1a_hash(const std::string& text) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string manifest_json(std::uint64_t config_hash, const std::string& command,
                          const std::vector<ManifestMetric>& metrics,
                          const std::vector<std::string>& files) {
    nlohmann::ordered_json j;
    char hash_buf[32];
    std::snprintf(hash_buf, sizeof(hash_buf), "%016llx",
                  static_cast<unsigned long long>(config_hash));
    j["config_hash"] = hash_buf;
    j["command"] = command;
    nlohmann::ordered_json jm = nlohmann::ordered_json::object();
    for (const ManifestMetric& m : metrics) jm[m.key] = m.value;
    j["metrics"] = jm;
    j["files"] = files;
    return j.dump(2) + "\n";
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParameterError("cannot open '" + path + "' for writing");
    out << content;
    if (!out) throw ParameterError("write to '" + path + "' failed");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParameterError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace bridge
