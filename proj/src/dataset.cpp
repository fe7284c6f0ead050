#include "latentgraph/dataset.hpp"

#include <algorithm>
#include <cerrno>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "latentgraph/rng.hpp"

namespace latentgraph {

namespace {

std::vector<std::string> split_line(const std::string& line, char delimiter) {
    std::vector<std::string> fields;
    std::string current;
    for (char ch : line) {
        if (ch == delimiter) {
            fields.push_back(current);
            current.clear();
        } else if (ch != '\r') {
            current += ch;
        }
    }
    fields.push_back(current);
    return fields;
}

std::string trim(const std::string& s) {
    std::size_t begin = s.find_first_not_of(" \t");
    if (begin == std::string::npos) return "";
    std::size_t end = s.find_last_not_of(" \t");
    return s.substr(begin, end - begin + 1);
}

bool parse_double(const std::string& text, double& out) {
    const std::string t = trim(text);
    if (t.empty()) return false;
    const char* begin = t.c_str();
    char* end = nullptr;
    errno = 0;
    out = std::strtod(begin, &end);
    if (end != begin + t.size() || errno == ERANGE) return false;
    return std::isfinite(out);
}

}  // namespace

void Dataset::validate() const {
    if (n() < 2) throw std::invalid_argument("dataset needs at least 2 instances");
    if (d() < 1) throw std::invalid_argument("dataset needs at least 1 feature");
    if (c() < 2) throw std::invalid_argument("dataset needs at least 2 classes");
    if (static_cast<Eigen::Index>(labels.size()) != n())
        throw std::invalid_argument("label count does not match instance count");
    if (!features.allFinite())
        throw std::invalid_argument("dataset contains non-finite feature values");
    std::vector<int> counts(class_names.size(), 0);
    for (int label : labels) {
        if (label < 0 || label >= c())
            throw std::invalid_argument("label index out of range");
        ++counts[static_cast<std::size_t>(label)];
    }
    for (std::size_t k = 0; k < counts.size(); ++k) {
        if (counts[k] == 0)
            throw std::invalid_argument("class '" + class_names[k] + "' has no instances");
    }
}

Dataset load_csv(const std::string& path, const LoadOptions& options) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);

    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("empty file: " + path);
    const std::vector<std::string> header = split_line(line, options.delimiter);

    int label_index = -1;
    for (std::size_t j = 0; j < header.size(); ++j) {
        if (trim(header[j]) == options.label_column) {
            if (label_index >= 0)
                throw std::runtime_error("duplicate label column '" + options.label_column +
                                         "' in " + path);
            label_index = static_cast<int>(j);
        }
    }
    if (label_index < 0)
        throw std::runtime_error("label column '" + options.label_column + "' not found in " +
                                 path);

    Dataset ds;
    ds.label_name = options.label_column;
    for (std::size_t j = 0; j < header.size(); ++j) {
        if (static_cast<int>(j) != label_index) ds.feature_names.push_back(trim(header[j]));
    }
    const std::size_t d = ds.feature_names.size();
    if (d == 0) throw std::runtime_error("no feature columns in " + path);

    std::vector<double> values;
    std::vector<std::string> raw_labels;
    std::size_t row = 1;  // header was row 1
    while (std::getline(in, line)) {
        ++row;
        if (trim(line).empty()) continue;
        const std::vector<std::string> fields = split_line(line, options.delimiter);
        if (fields.size() != header.size()) {
            throw std::runtime_error(path + ": row " + std::to_string(row) + " has " +
                                     std::to_string(fields.size()) + " fields, expected " +
                                     std::to_string(header.size()));
        }
        for (std::size_t j = 0; j < fields.size(); ++j) {
            if (static_cast<int>(j) == label_index) {
                raw_labels.push_back(trim(fields[j]));
                continue;
            }
            double value = 0.0;
            if (!parse_double(fields[j], value)) {
                throw std::runtime_error(path + ": unparseable cell at row " +
                                         std::to_string(row) + ", column '" + trim(header[j]) +
                                         "': '" + trim(fields[j]) + "'");
            }
            values.push_back(value);
        }
    }

    const std::size_t n = raw_labels.size();
    if (n < 2) throw std::runtime_error(path + ": fewer than 2 data rows");

    // Dense label indices in first-appearance order.
    std::unordered_map<std::string, int> label_map;
    for (const std::string& name : raw_labels) {
        if (label_map.find(name) == label_map.end()) {
            const int next = static_cast<int>(ds.class_names.size());
            label_map.emplace(name, next);
            ds.class_names.push_back(name);
        }
    }
    ds.labels.reserve(n);
    for (const std::string& name : raw_labels) ds.labels.push_back(label_map.at(name));

    ds.features.resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(d));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < d; ++j)
            ds.features(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                values[i * d + j];

    if (options.strict) {
        std::vector<int> counts(ds.class_names.size(), 0);
        for (int label : ds.labels) ++counts[static_cast<std::size_t>(label)];
        for (std::size_t k = 0; k < counts.size(); ++k) {
            if (counts[k] < 2)
                throw std::runtime_error(path + ": class '" + ds.class_names[k] +
                                         "' has fewer than 2 instances");
        }
    }

    ds.validate();
    return ds;
}

void write_csv(const Dataset& ds, const std::string& path, char delimiter) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write file: " + path);

    for (Eigen::Index j = 0; j < ds.d(); ++j)
        out << ds.feature_names[static_cast<std::size_t>(j)] << delimiter;
    out << ds.label_name << '\n';

    char buffer[64];
    for (Eigen::Index i = 0; i < ds.n(); ++i) {
        for (Eigen::Index j = 0; j < ds.d(); ++j) {
            std::snprintf(buffer, sizeof(buffer), "%.17g", ds.features(i, j));
            out << buffer << delimiter;
        }
        out << ds.class_names[static_cast<std::size_t>(ds.labels[static_cast<std::size_t>(i)])]
            << '\n';
    }
    if (!out) throw std::runtime_error("failed writing " + path);
}

Dataset standardize(const Dataset& ds, StandardizeMode mode) {
    if (mode == StandardizeMode::none) return ds;

    Dataset out = ds;
    const double n = static_cast<double>(ds.n());
    for (Eigen::Index j = 0; j < ds.d(); ++j) {
        const double mean = ds.features.col(j).mean();
        const double var = (ds.features.col(j).array() - mean).square().sum() / n;
        const double std_dev = std::sqrt(var);
        if (std_dev == 0.0) {
            out.features.col(j).setZero();
        } else {
            out.features.col(j) = (ds.features.col(j).array() - mean) / std_dev;
        }
    }
    return out;
}

Dataset synth_blobs(int n, int d, int c, double separation, std::uint64_t seed) {
    if (c < 2 || n < c || d < 1 || !(separation > 0.0))
        throw std::invalid_argument("synth_blobs: need n >= c >= 2, d >= 1, separation > 0");

    // Centers: one per class on its own coordinate axis when c <= d (mutual
    // distance exactly `separation`), otherwise spaced along the first axis.
    Matrix centers = Matrix::Zero(c, d);
    if (c <= d) {
        const double radius = separation / std::sqrt(2.0);
        for (int k = 0; k < c; ++k) centers(k, k) = radius;
    } else {
        for (int k = 0; k < c; ++k) centers(k, 0) = separation * static_cast<double>(k);
    }

    Dataset ds;
    ds.features.resize(n, d);
    ds.labels.resize(static_cast<std::size_t>(n));
    Rng rng(seed);
    for (int i = 0; i < n; ++i) {
        const int label = i % c;
        ds.labels[static_cast<std::size_t>(i)] = label;
        for (int j = 0; j < d; ++j) ds.features(i, j) = centers(label, j) + rng.normal();
    }
    for (int k = 0; k < c; ++k) ds.class_names.push_back("class" + std::to_string(k));
    for (int j = 0; j < d; ++j) ds.feature_names.push_back("f" + std::to_string(j));
    ds.validate();
    return ds;
}

}  // namespace latentgraph
