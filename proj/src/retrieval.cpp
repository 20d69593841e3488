/**********
 *   Copyright 2026 The polcal Authors
 *
 *   Licensed under the Apache License, Version 2.0 (the "License");
 *   you may not use this file except in compliance with the License.
 *   You may obtain a copy of the License at
 *
 *       http://www.apache.org/licenses/LICENSE-2.0
 *
 *   Unless required by applicable law or agreed to in writing, software
 *   distributed under the License is distributed on an "AS IS" BASIS,
 *   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 *   See the License for the specific language governing permissions and
 *   limitations under the License.
\**********/
#include "polcal/retrieval.hpp"

#include "polcal/errors.hpp"
#include "polcal/rng.hpp"

#include <cmath>
#include <sstream>
#include <vector>

namespace polcal {

namespace detail {

Eigen::Matrix<double, 4, Eigen::Dynamic> input_matrix(const MeasurementSet& set) {
    Eigen::Matrix<double, 4, Eigen::Dynamic> s(4, set.records.size());
    for (size_t i = 0; i < set.records.size(); ++i) {
        const auto& v = set.records[i].s_in;
        s.col(i) << v.s0, v.s1, v.s2, v.s3;
    }
    return s;
}

Eigen::Matrix<double, 4, Eigen::Dynamic> output_mean_matrix(const MeasurementSet& set) {
    Eigen::Matrix<double, 4, Eigen::Dynamic> y(4, set.records.size());
    for (size_t i = 0; i < set.records.size(); ++i) {
        StokesVector m = mean_stokes(set.records[i].samples_out);
        y.col(i) << m.s0, m.s1, m.s2, m.s3;
    }
    return y;
}

Eigen::MatrixXd input_pseudoinverse(const Eigen::Matrix<double, 4, Eigen::Dynamic>& s_in,
                                    double* condition_number) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(s_in, Eigen::ComputeFullU | Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    const double cutoff = kPinvCutoff * sv(0);
    int rank = 0;
    for (int i = 0; i < sv.size(); ++i) {
        if (sv(i) > cutoff) ++rank;
    }
    if (rank < 4) {
        std::ostringstream msg;
        msg << "Mueller retrieval is ill-posed: input states span rank " << rank
            << " of 4; unobserved Stokes directions:";
        for (int i = rank; i < 4; ++i) {
            Eigen::Vector4d u = svd.matrixU().col(i);
            msg << " [" << u(0) << ", " << u(1) << ", " << u(2) << ", " << u(3) << "]";
        }
        throw IllPosedError(msg.str());
    }
    if (condition_number) *condition_number = sv(0) / sv(3);
    Eigen::VectorXd inv = sv.head(4).cwiseInverse();
    return svd.matrixV() * inv.asDiagonal() * svd.matrixU().transpose();
}

Eigen::Matrix4d psd_sqrt(const Eigen::Matrix4d& cov) {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> es(cov);
    Eigen::Vector4d lam = es.eigenvalues().cwiseMax(0.0);
    return es.eigenvectors() * lam.cwiseSqrt().asDiagonal() * es.eigenvectors().transpose();
}

namespace {

void validate_set(const MeasurementSet& set) {
    if (set.records.size() < 4) {
        throw IllPosedError("Mueller retrieval needs at least 4 records, got " +
                            std::to_string(set.records.size()));
    }
    for (const auto& r : set.records) {
        if (r.samples_out.empty()) {
            throw DomainError("record '" + r.label + "' has no output samples");
        }
    }
}

/// Covariance of each record's output MEAN: sample covariance / n.
/// Single-sample records count as exact (zero covariance).
std::vector<Eigen::Matrix4d> mean_covariances(const MeasurementSet& set) {
    std::vector<Eigen::Matrix4d> cov;
    cov.reserve(set.records.size());
    for (const auto& r : set.records) {
        if (r.samples_out.size() < 2) {
            cov.push_back(Eigen::Matrix4d::Zero());
        } else {
            cov.push_back(stokes_statistics(r.samples_out).covariance /
                          static_cast<double>(r.samples_out.size()));
        }
    }
    return cov;
}

MuellerMatrix from_eigen4(const Eigen::Matrix4d& e) {
    MuellerMatrix m;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) m(r, c) = e(r, c);
    return m;
}

} // namespace

} // namespace detail

MuellerEstimate estimate_mueller(const MeasurementSet& set, Weighting weighting) {
    detail::validate_set(set);
    auto s_in = detail::input_matrix(set);
    auto y = detail::output_mean_matrix(set);

    MuellerEstimate out;
    Eigen::MatrixXd pinv = detail::input_pseudoinverse(s_in, &out.condition_number);

    if (weighting == Weighting::none) {
        Eigen::Matrix4d m = y * pinv;
        out.m = detail::from_eigen4(m);
    } else {
        // GLS: rows of M couple through the per-record weight matrices, so
        // solve the vectorized 16x16 normal equations.
        auto cov = detail::mean_covariances(set);
        double scale = 0.0;
        for (const auto& c : cov) scale = std::max(scale, c.trace());
        const double ridge = std::max(scale, 1.0) * 1e-12;
        Eigen::MatrixXd a = Eigen::MatrixXd::Zero(16, 16);
        Eigen::VectorXd b = Eigen::VectorXd::Zero(16);
        for (size_t r = 0; r < set.records.size(); ++r) {
            Eigen::Matrix4d w = (cov[r] + ridge * Eigen::Matrix4d::Identity()).inverse();
            Eigen::Vector4d s = s_in.col(r);
            Eigen::Vector4d yo = y.col(r);
            // vec(M) ordered row-major: index 4*i + j for element m_ij.
            for (int i = 0; i < 4; ++i) {
                for (int ip = 0; ip < 4; ++ip) {
                    for (int j = 0; j < 4; ++j) {
                        for (int jp = 0; jp < 4; ++jp) {
                            a(4 * i + j, 4 * ip + jp) += w(i, ip) * s(j) * s(jp);
                        }
                    }
                }
            }
            for (int i = 0; i < 4; ++i) {
                for (int j = 0; j < 4; ++j) {
                    double acc = 0.0;
                    for (int ip = 0; ip < 4; ++ip) acc += w(i, ip) * yo(ip);
                    b(4 * i + j) += acc * s(j);
                }
            }
        }
        Eigen::VectorXd v = a.ldlt().solve(b);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) out.m(i, j) = v(4 * i + j);
    }

    out.element_sigma = propagate_uncertainty_linear(set);
    return out;
}

Eigen::Matrix4d propagate_uncertainty_linear(const MeasurementSet& set) {
    detail::validate_set(set);
    auto s_in = detail::input_matrix(set);
    Eigen::MatrixXd pinv = detail::input_pseudoinverse(s_in, nullptr);
    auto cov = detail::mean_covariances(set);

    // M_ij = sum_r Y_ir P_rj  =>  Var(M_ij) = sum_r Var(Y_ir) P_rj^2.
    Eigen::Matrix4d var = Eigen::Matrix4d::Zero();
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            double acc = 0.0;
            for (size_t r = 0; r < set.records.size(); ++r) {
                double p = pinv(static_cast<int>(r), j);
                acc += cov[r](i, i) * p * p;
            }
            var(i, j) = acc;
        }
    }
    return var.cwiseSqrt();
}

Eigen::Matrix4d propagate_uncertainty(const MeasurementSet& set, int n_resamples,
                                      std::uint64_t seed, Exec exec) {
    detail::validate_set(set);
    if (n_resamples < 100) {
        throw DomainError("propagate_uncertainty: need at least 100 resamples, got " +
                          std::to_string(n_resamples));
    }
    auto s_in = detail::input_matrix(set);
    auto y = detail::output_mean_matrix(set);
    Eigen::MatrixXd pinv = detail::input_pseudoinverse(s_in, nullptr);
    auto cov = detail::mean_covariances(set);
    std::vector<Eigen::Matrix4d> roots;
    roots.reserve(cov.size());
    for (const auto& c : cov) roots.push_back(detail::psd_sqrt(c));

    const auto n_rec = static_cast<int>(set.records.size());
    std::vector<Eigen::Matrix4d> draws(static_cast<size_t>(n_resamples));
    for_each_index(exec, n_resamples, [&](std::int64_t j) {
        rng::Generator gen(rng::derive_seed(seed, rng::Stream::resampling,
                                            static_cast<std::uint64_t>(j)));
        Eigen::MatrixXd yj(4, n_rec);
        for (int r = 0; r < n_rec; ++r) {
            Eigen::Vector4d z(gen.normal(), gen.normal(), gen.normal(), gen.normal());
            yj.col(r) = y.col(r) + roots[static_cast<size_t>(r)] * z;
        }
        draws[static_cast<size_t>(j)] = yj * pinv;
    });

    // Serial reduction in index order keeps results independent of threading.
    Eigen::Matrix4d mean = Eigen::Matrix4d::Zero();
    for (const auto& d : draws) mean += d;
    mean /= static_cast<double>(n_resamples);
    Eigen::Matrix4d ss = Eigen::Matrix4d::Zero();
    for (const auto& d : draws) {
        Eigen::Matrix4d dd = d - mean;
        ss += dd.cwiseProduct(dd);
    }
    ss /= static_cast<double>(n_resamples - 1);
    return ss.cwiseSqrt();
}

} // namespace polcal
