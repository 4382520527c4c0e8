// SPDX-License-Identifier: Apache-2.0
//
// a2glink: air-to-ground link simulation and measurement analysis toolkit
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#include <cstdio>

int main() {
    std::puts("a2glink: subcommands not wired up yet");
    return 1;
}
