// Copyright 2026 The aftlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <filesystem>
#include <string>
#include <vector>

#include "aftlab/generator.hpp"
#include "aftlab/program.hpp"
#include "aftlab/syntax.hpp"

namespace fixtures {

inline std::string corpus_path(const std::string& file) {
  return std::string(AFTLAB_CORPUS_DIR) + "/" + file;
}

inline aftlab::Program corpus(const std::string& name) {
  return aftlab::parse_program_file(corpus_path(name + ".lp"));
}

inline std::vector<std::string> corpus_names() {
  std::vector<std::string> out;
  for (const auto& e : std::filesystem::directory_iterator(AFTLAB_CORPUS_DIR)) {
    if (e.path().extension() == ".lp") out.push_back(e.path().stem().string());
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Corpus programs followed by seeded random ones of every shape.
inline std::vector<aftlab::Program> sample_programs(std::size_t random = 80) {
  std::vector<aftlab::Program> out;
  for (const auto& n : corpus_names()) out.push_back(corpus(n));
  for (auto& p : aftlab::random_programs(random, 17)) out.push_back(std::move(p));
  return out;
}

}  // namespace fixtures
