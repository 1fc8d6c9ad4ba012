#include "vectorsim/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <system_error>

namespace vectorsim {

std::string format_double(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x);
    if (res.ec != std::errc{})
        throw std::runtime_error("format_double: conversion failed");
    return std::string(buf, res.ptr);
}

double parse_double(const std::string& s) {
    double value = 0.0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    const auto res = std::from_chars(first, last, value);
    if (res.ec != std::errc{} || res.ptr != last)
        throw std::runtime_error("parse_double: invalid number '" + s + "'");
    return value;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << content;
    if (!out) throw std::runtime_error("write failed: " + path);
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

std::vector<std::vector<std::string>> read_csv(const std::string& path,
                                               const std::string& header) {
    std::istringstream in(read_file(path));
    std::string line;
    if (!std::getline(in, line))
        throw std::runtime_error("empty CSV: " + path);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != header)
        throw std::runtime_error("unexpected CSV header in " + path + ": " + line);
    std::vector<std::vector<std::string>> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        rows.push_back(split_csv_line(line));
    }
    return rows;
}

}  // namespace

void emit_trajectory_csv(const Trajectory& traj, const std::string& path) {
    std::string out = "t,L_v,A_v,K_v\n";
    for (const auto& s : traj.samples) {
        out += format_double(s.t);
        out += ',';
        out += format_double(s.L_v);
        out += ',';
        out += format_double(s.A_v);
        out += ',';
        out += format_double(s.K_v);
        out += '\n';
    }
    write_file(path, out);
}

std::vector<TrajectorySample> parse_trajectory_csv(const std::string& path) {
    std::vector<TrajectorySample> out;
    for (const auto& row : read_csv(path, "t,L_v,A_v,K_v")) {
        if (row.size() != 4)
            throw std::runtime_error("bad trajectory row in " + path);
        out.push_back({parse_double(row[0]), parse_double(row[1]),
                       parse_double(row[2]), parse_double(row[3])});
    }
    return out;
}

void emit_impulse_csv(const Trajectory& traj, const std::string& path) {
    std::string out = "t,pi,H,gamma,K_pre,K_post,s_e\n";
    for (const auto& r : traj.impulse_log) {
        out += format_double(r.t);
        out += ',';
        out += format_double(r.pi);
        out += ',';
        out += format_double(r.H);
        out += ',';
        out += format_double(r.gamma);
        out += ',';
        out += format_double(r.K_pre);
        out += ',';
        out += format_double(r.K_post);
        out += ',';
        out += std::to_string(r.s_e);
        out += '\n';
    }
    write_file(path, out);
}

std::vector<ImpulseRecord> parse_impulse_csv(const std::string& path) {
    std::vector<ImpulseRecord> out;
    for (const auto& row : read_csv(path, "t,pi,H,gamma,K_pre,K_post,s_e")) {
        if (row.size() != 7)
            throw std::runtime_error("bad impulse row in " + path);
        out.push_back({parse_double(row[0]), parse_double(row[1]),
                       parse_double(row[2]), parse_double(row[3]),
                       parse_double(row[4]), parse_double(row[5]),
                       static_cast<int>(parse_double(row[6]))});
    }
    return out;
}

}  // namespace vectorsim
