// Copyright 2026 The bnglue Authors
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

// Checks, certifies and verifies ((4,1,3), (5,2,3), n=6), then prints the
// certificate document.

#include <iostream>

#include "bnglue/bnglue.hpp"

int main() {
  using namespace bnglue;
  GluingInstance x(CurveSpec(4, 1, 3), CurveSpec(5, 2, 3), 6);

  Verdict v = check_main(x);
  std::cout << "check_main " << to_string(x) << ": " << to_string(v.outcome) << "\n";
  for (const Check& c : v.checks) std::cout << "  " << c.label << ": " << c.inequality << "\n";

  CertifyResult res = certify_main(x);
  if (!res.ok()) {
    std::cerr << "refused: " << res.refusal().reason << "\n";
    return 1;
  }
  VerificationReport rep = verify(*res.certificate());
  std::cout << "depth " << depth(*res.certificate()) << ", verified " << (rep.ok ? "ok" : "with failures") << " ("
            << rep.conditions_checked << " conditions)\n";
  std::cout << dump(certificate_document(*res.certificate()));
  return rep.ok ? 0 : 1;
}
