// SPDX-License-Identifier: Apache-2.0
//
// mimo-converge: convergence simulator for massive MIMO channels and precoders
// Copyright (C) 2026 The mimo-converge Authors
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

#include "mimoconv/cli.hpp"

#include <iostream>

int main(int argc, char **argv)
{
    using namespace mimoconv;
    try
    {
        const RunConfig cfg = parse_config(argc, argv);
        emit(run_config(cfg), cfg.format, cfg.output, std::cout);
        return 0;
    }
    catch (const HelpRequested &h)
    {
        std::cout << h.what();
        return 0;
    }
    catch (const ConfigError &e)
    {
        std::cerr << "configuration error: " << e.what() << '\n';
        return 2;
    }
    catch (const SingularMatrixError &e)
    {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return 3;
    }
    catch (const NotPsdError &e)
    {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return 3;
    }
    catch (const OutputError &e)
    {
        std::cerr << "I/O error: " << e.what() << '\n';
        return 4;
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
