#ifndef VECTORSIM_IO_HPP
#define VECTORSIM_IO_HPP

#include <string>
#include <vector>

#include "vectorsim/dynamics.hpp"

namespace vectorsim {

// Shortest decimal representation that round-trips to the same double.
std::string format_double(double x);
double parse_double(const std::string& s);  // throws on trailing garbage

// Columns: t,L_v,A_v,K_v
void emit_trajectory_csv(const Trajectory& traj, const std::string& path);
std::vector<TrajectorySample> parse_trajectory_csv(const std::string& path);

// Columns: t,pi,H,gamma,K_pre,K_post,s_e
void emit_impulse_csv(const Trajectory& traj, const std::string& path);
std::vector<ImpulseRecord> parse_impulse_csv(const std::string& path);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace vectorsim

#endif
