// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace qseries {
inline constexpr const char* library_version = "1.0.0";
}
