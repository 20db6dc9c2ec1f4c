/*
   Copyright 2026 The fxgroup Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Command-line front end.
//
//   fxg --gens a,b [--ring zt|z] [--seed N] [--points k1,k2,...] <command> [args]
//   fxg --gens a,b --batch FILE
//   fxg --gens a,b            (reads commands from standard input)

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "fxg/errors.hpp"
#include "fxg/session.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Exact computation in free exponential groups", "fxg"};
  std::string gens;
  std::string ring = "zt";
  std::uint64_t seed = 1;
  std::string batch;
  std::vector<long> points{-2, -1, 0, 1, 2, 3};
  app.add_option("--gens", gens, "Comma-separated generator names")->required();
  app.add_option("--ring", ring, "Exponent ring")->check(CLI::IsMember({"zt", "z"}));
  app.add_option("--seed", seed, "Seed for randomised commands");
  app.add_option("--batch", batch, "Run commands from a file");
  app.add_option("--points", points, "Evaluation points for eval")->delimiter(',')->allow_extra_args(false);
  app.prefix_command();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return fxg::kError;
  }

  try {
    fxg::Session session(fxg::Alphabet::parse(gens), fxg::make_ring(ring), seed, points);
    std::vector<std::string> rest = app.remaining();
    if (!batch.empty()) {
      if (!rest.empty()) throw fxg::Error("a command cannot be combined with --batch");
      std::ifstream in(batch);
      if (!in) throw fxg::Error("cannot open batch file '" + batch + "'");
      return fxg::run_batch(session, in, std::cout);
    }
    if (rest.empty()) return fxg::run_batch(session, std::cin, std::cout);
    std::ostringstream line;
    for (std::size_t i = 0; i < rest.size(); ++i) line << (i ? " " : "") << rest[i];
    fxg::CommandResult r = session.run(line.str());
    if (r.status == fxg::kError) {
      std::cerr << "error: " << r.output << '\n';
    } else {
      std::cout << r.output << '\n';
    }
    return r.status;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return fxg::kError;
  }
}
