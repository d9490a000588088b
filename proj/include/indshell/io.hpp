#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "indshell/chordality.hpp"
#include "indshell/constructions.hpp"
#include "indshell/shelling.hpp"

namespace indshell {

/// Text format: "n m", then m lines "u v" (0-based); '#' starts a comment.
/// JSON format: {"n": .., "edges": [[u, v], ..], "labels": [..]} (labels optional).
/// Syntax problems throw ParseError; loops and duplicate edges InvalidGraph.
LabeledGraph parse_graph(std::string_view text);
LabeledGraph load_graph(const std::string& path);

/// Canonical text form: header then edges in sorted order.
std::string to_text(const Graph& g);
std::string to_json(const LabeledGraph& g);

/// 16 hex digits of FNV-1a over to_text(g). Binds certificates to a host.
std::string host_hash(const Graph& g);

/// Certificates are JSON documents bound to (host graph, r).
std::string shelling_certificate(const Graph& host, int r, const ShellingCertificate& cert);
std::string bad_minor_certificate(const Graph& host, int r, const BadMinorCertificate& cert, bool contractions_only);
/// A NotShellable outcome: re-checked by rerunning the exhaustive search.
std::string exhausted_search_certificate(const Graph& host, int r, std::uint64_t nodes);

struct CertificateCheck {
  bool valid = false;
  std::string kind;
  std::string reason;
};

/// Re-verifies a certificate against the host graph it names.
CertificateCheck verify_certificate(const Graph& host, std::string_view certificate_json,
                                    std::uint64_t budget = kDefaultBudget);

void write_file(const std::string& path, const std::string& content);

}  // namespace indshell
