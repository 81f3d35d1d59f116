// SPDX-License-Identifier: Apache-2.0
//
// bsplit: beam-split aware IRS/OFDMA downlink simulator
// Copyright (C) 2026 The bsplit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef BSPLIT_CLI_HPP
#define BSPLIT_CLI_HPP

#include <iosfwd>

namespace bsplit
{
    // Exit codes: 0 success, 1 runtime failure, 2 usage or configuration error.
    int cli_main(int argc, const char *const *argv, std::ostream &out, std::ostream &err);
}

#endif
