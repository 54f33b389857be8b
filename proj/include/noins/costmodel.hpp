// Copyright 2026 The NOINS Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NOINS_COSTMODEL_HPP
#define NOINS_COSTMODEL_HPP

#include <cmath>
#include <map>
#include <string>

#include "noins/wire.hpp"

// Analytic communication-cost comparison. Byte counts come from the pinned
// wire layouts; the delay model is first order (propagation + serialization
// + fixed per-message overhead), deliberately not a packet-level simulation.

namespace noins {
namespace costmodel {

enum class Approach { explicit_scms, simpl, noins };

inline const char* approach_name(Approach a) {
  switch (a) {
    case Approach::explicit_scms: return "explicit";
    case Approach::simpl: return "simpl";
    case Approach::noins: return "noins";
  }
  return "?";
}

struct Workload {
  Approach approach = Approach::noins;
  uint64_t n_c = 500;
  uint64_t n_cs = 50;  // noins only

  uint64_t n_ci() const {
    if (approach != Approach::noins) return n_c;
    if (n_cs == 0 || n_c % n_cs != 0)
      throw NoinsError(ErrorCode::usage, "n_c must be a multiple of n_cs");
    return n_c / n_cs;
  }
};

struct Scenario {
  std::string name = "small";
  double ca_rsu_km = 5.0;               // 60 for the large city
  double wired_speed_kms = 299792.46;   // speed of light over fiber
  double wired_bw_bps = 100e6;          // assumed CA-RSU link
  double wireless_bw_bps = 6e6;         // 802.11p-class last hop
  double per_msg_overhead_s = 0.002;    // assumed per-transmission overhead
  double veh_rsu_max_m = 300.0;
  double veh_veh_min_m = 10.0;
  double veh_veh_max_m = 100.0;
  uint64_t batch = 20;                  // CA-issued certs per download

  static Scenario small_city() { return Scenario{}; }
  static Scenario large_city() {
    Scenario s;
    s.name = "large";
    s.ca_rsu_km = 60.0;
    return s;
  }
};

// Size substitutions applied in accounting only. The implemented explicit
// baseline signs with Schnorr; the substitution models the RSA-2048 /
// X.509 deployment instead.
struct SizeOptions {
  bool rsa_explicit = true;
  size_t rsa_sig_size = 256;
  size_t rsa_pub_size = 270;
  size_t batch_frame_overhead = 8;  // assumed per-batch container header
};

inline size_t schnorr_sig_size(const Group& g) { return 2 * g.scalar_size(); }

// Plaintext size of one m_I2V for the approach.
inline size_t i2v_plaintext_size(Approach a, const Group& g,
                                 const SizeOptions& opt) {
  switch (a) {
    case Approach::noins:
      return wire::size_of(wire::Kind::noins_i2v_payload, g);
    case Approach::simpl:
      return wire::size_of(wire::Kind::simpl_i2v_payload, g);
    case Approach::explicit_scms: {
      size_t base = wire::size_of(wire::Kind::explicit_i2v_payload, g);
      if (opt.rsa_explicit)
        base = base - schnorr_sig_size(g) + opt.rsa_sig_size;
      return base;
    }
  }
  throw NoinsError(ErrorCode::usage, "unknown approach");
}

inline size_t i2v_message_size(Approach a, const Group& g,
                               const SizeOptions& opt) {
  // ECIES framing: ephemeral point + MAC tag
  return i2v_plaintext_size(a, g, opt) + g.point_size() + 16;
}

// Per-pseudonym authentication values sent in V2X communications
// (certificate material plus the message signature; the application
// message body is excluded).
inline size_t v2x_auth_size(Approach a, const Group& g,
                            const SizeOptions& opt) {
  size_t sig = schnorr_sig_size(g);
  switch (a) {
    case Approach::noins:
      return wire::size_of(wire::Kind::short_term_cert, g) +
             2 * g.point_size() + g.scalar_size() + sig;
    case Approach::simpl:
      return wire::size_of(wire::Kind::simpl_cert, g) + sig;
    case Approach::explicit_scms: {
      size_t cert = wire::size_of(wire::Kind::explicit_cert, g);
      if (opt.rsa_explicit) {
        cert = cert - sig + opt.rsa_sig_size;
        sig = opt.rsa_sig_size;
      }
      return cert + sig;
    }
  }
  throw NoinsError(ErrorCode::usage, "unknown approach");
}

inline uint64_t obtain_message_count(const Workload& w) { return w.n_ci(); }

inline uint64_t obtain_batches(const Workload& w, uint64_t batch) {
  uint64_t msgs = obtain_message_count(w);
  return (msgs + batch - 1) / batch;
}

// Total bytes downloaded to obtain the workload's certificates.
inline uint64_t obtain_bytes(const Workload& w, const Group& g,
                             const SizeOptions& opt, uint64_t batch = 20) {
  if (w.n_c == 0) return 0;
  uint64_t msgs = obtain_message_count(w);
  return msgs * i2v_message_size(w.approach, g, opt) +
         obtain_batches(w, batch) * opt.batch_frame_overhead;
}

// Total bytes of authentication values sent while using n_c pseudonyms.
inline uint64_t use_bytes(const Workload& w, const Group& g,
                          const SizeOptions& opt) {
  return w.n_c * v2x_auth_size(w.approach, g, opt);
}

inline double obtain_delay_s(const Workload& w, const Group& g,
                             const SizeOptions& opt, const Scenario& sc) {
  if (w.n_c == 0) return 0.0;
  uint64_t batches = obtain_batches(w, sc.batch);
  uint64_t total = obtain_bytes(w, g, opt, sc.batch);
  double bytes_per_batch = double(total) / double(batches);
  double wired_prop = sc.ca_rsu_km / sc.wired_speed_kms;
  double wireless_prop = (sc.veh_rsu_max_m / 2.0) / (sc.wired_speed_kms * 1e3);
  double per_batch = wired_prop + bytes_per_batch * 8.0 / sc.wired_bw_bps +
                     wireless_prop + bytes_per_batch * 8.0 / sc.wireless_bw_bps +
                     sc.per_msg_overhead_s;
  return double(batches) * per_batch;
}

inline double use_delay_s(const Workload& w, const Group& g,
                          const SizeOptions& opt, const Scenario& sc) {
  double v2v_prop =
      ((sc.veh_veh_min_m + sc.veh_veh_max_m) / 2.0) / (sc.wired_speed_kms * 1e3);
  double per_msg = v2v_prop +
                   double(v2x_auth_size(w.approach, g, opt)) * 8.0 /
                       sc.wireless_bw_bps +
                   sc.per_msg_overhead_s;
  return double(w.n_c) * per_msg;
}

// ---- symbolic operation counts (structure of the computation-cost table) ----

enum class Op {
  point_mul,
  point_add,
  hash,
  sym_op,     // one AES block (linkage PRF)
  sign,
  verify_sig,
  ecies_enc,
  ecies_dec,
};

inline const char* op_name(Op op) {
  switch (op) {
    case Op::point_mul: return "point_mul";
    case Op::point_add: return "point_add";
    case Op::hash: return "hash";
    case Op::sym_op: return "sym_op";
    case Op::sign: return "sign";
    case Op::verify_sig: return "verify_sig";
    case Op::ecies_enc: return "ecies_enc";
    case Op::ecies_dec: return "ecies_dec";
  }
  return "?";
}

// count = constant + per_nci * n_ci + per_nc * n_c
struct LinearCount {
  double constant = 0;
  double per_nci = 0;
  double per_nc = 0;

  double at(uint64_t n_ci, uint64_t n_c) const {
    return constant + per_nci * double(n_ci) + per_nc * double(n_c);
  }
};

using OpTable = std::map<Op, LinearCount>;

struct ApproachOps {
  OpTable ca;
  OpTable vehicle;
  OpTable receiver;
};

// Certificate-processing operations per role.
inline ApproachOps op_counts(Approach a) {
  ApproachOps t;
  switch (a) {
    case Approach::explicit_scms:
      t.ca[Op::point_mul] = {0, 0, 1};
      t.ca[Op::point_add] = {0, 0, 1};
      t.ca[Op::sign] = {0, 0, 1};
      t.ca[Op::ecies_enc] = {0, 0, 1};
      t.vehicle[Op::ecies_dec] = {0, 0, 1};
      t.vehicle[Op::hash] = {0, 0, 1};  // cocoon expansion f
      t.vehicle[Op::verify_sig] = {0, 0, 1};
      t.vehicle[Op::point_mul] = {0, 0, 1};  // pkv ?= skv*g
      t.receiver[Op::verify_sig] = {0, 0, 1};
      break;
    case Approach::simpl:
      t.ca[Op::point_mul] = {0, 0, 1};
      t.ca[Op::point_add] = {0, 0, 1};
      t.ca[Op::hash] = {0, 0, 1};
      t.ca[Op::ecies_enc] = {0, 0, 1};
      t.vehicle[Op::ecies_dec] = {0, 0, 1};
      t.vehicle[Op::hash] = {0, 0, 2};  // f, h
      t.vehicle[Op::point_mul] = {0, 0, 2};  // skv*g, h*pkc
      t.vehicle[Op::point_add] = {0, 0, 1};
      t.receiver[Op::hash] = {0, 0, 1};
      t.receiver[Op::point_mul] = {0, 0, 1};
      t.receiver[Op::point_add] = {0, 0, 1};
      break;
    case Approach::noins:
      // CA: per CA-issued credential only
      t.ca[Op::point_mul] = {0, 2, 0};  // r1*g, r2*g
      t.ca[Op::point_add] = {0, 2, 0};
      t.ca[Op::hash] = {0, 2, 0};  // h1, h2
      t.ca[Op::ecies_enc] = {0, 1, 0};
      // Vehicle: acceptance per credential, generation per pseudonym
      t.vehicle[Op::ecies_dec] = {0, 1, 0};
      t.vehicle[Op::hash] = {0, 3, 2};  // f,h1,h2 ; h2_j,cha_j
      t.vehicle[Op::point_mul] = {0, 3, 4};  // check ; r3*g,rho*g,r4*g,skv*g
      t.vehicle[Op::point_add] = {0, 2, 2};  // check ; rcv_j, pks_j
      t.vehicle[Op::sym_op] = {0, 0, 1};     // linkage PRF
      // Receiver: Profver + reconstruction per pseudonym
      t.receiver[Op::hash] = {0, 0, 3};       // cha_j, h1, h2_j
      t.receiver[Op::point_mul] = {0, 0, 4};  // resp*g, cha*delta, h1*pkc, h2_j*pks_j
      t.receiver[Op::point_add] = {0, 0, 4};  // delta, +com, two adds
      break;
  }
  return t;
}

// ---- report ----

struct ApproachCost {
  Approach approach;
  uint64_t obtain_bytes = 0;
  uint64_t use_bytes = 0;
  double obtain_delay_s = 0;
  double use_delay_s = 0;
  double total_delay_s = 0;
};

struct CostReport {
  Scenario scenario;
  uint64_t n_c = 0;
  uint64_t n_cs = 0;
  SizeOptions options;
  std::vector<ApproachCost> rows;
};

inline CostReport compare(uint64_t n_c, uint64_t n_cs, const Scenario& sc,
                          const Group& g, const SizeOptions& opt = {}) {
  CostReport rep;
  rep.scenario = sc;
  rep.n_c = n_c;
  rep.n_cs = n_cs;
  rep.options = opt;
  for (Approach a :
       {Approach::explicit_scms, Approach::simpl, Approach::noins}) {
    Workload w{a, n_c, n_cs};
    ApproachCost c;
    c.approach = a;
    c.obtain_bytes = obtain_bytes(w, g, opt, sc.batch);
    c.use_bytes = use_bytes(w, g, opt);
    c.obtain_delay_s = obtain_delay_s(w, g, opt, sc);
    c.use_delay_s = use_delay_s(w, g, opt, sc);
    c.total_delay_s = c.obtain_delay_s + c.use_delay_s;
    rep.rows.push_back(c);
  }
  return rep;
}

}  // namespace costmodel
}  // namespace noins

#endif  // NOINS_COSTMODEL_HPP
