#pragma once

namespace cli_golden {

struct GoldenCase {
  const char* file;  // file name under the golden directory
  const char* args;  // arguments appended to the CLI binary
};

// Shared by the cli unit suite and the acceptance runner. Every case has to
// reproduce the stored bytes exactly, run after run; one JSON golden per
// subcommand pins the schema.
inline constexpr GoldenCase kCases[] = {
    {"compositions_3.txt", "compositions 3"},
    {"compositions_3.json", "compositions 3 --json"},
    {"tree_woon_4.json", "tree woon -N 4 --json"},
    {"tree_woon_dot_3.txt", "tree woon --dot -N 3"},
    {"sequence_bernoulli_4.txt", "sequence bernoulli --order 4"},
    {"sequence_bernoulli_4.json", "sequence bernoulli --order 4 --json"},
    {"compose_log1p_geometric_8.json", "compose log1p geometric -N 8 --json"},
    {"verify_pitree_8.json", "verify --suite pitree --max-n 8 --json"},
    {"digitsum_log1p_8.json", "digitsum log1p -N 8 --json"},
    {"iterated_geo3_6.json", "iterated geometric geometric geometric -N 6 --json"},
    {"iterated_dot_2.txt", "iterated log1p exp_minus_one --shape 0 --dot"},
};

inline constexpr int kCaseCount = static_cast<int>(sizeof(kCases) / sizeof(kCases[0]));

}  // namespace cli_golden
