// Copyright 2026 The compdesign Authors
// SPDX-License-Identifier: Apache-2.0

#include "frontend/api.hpp"

namespace compdesign::frontend {

void check(cd_status status) {
    if (status != CD_OK) throw ApiError(status, cd_last_error_field(), cd_last_error());
}

LawHandle calibrate(const cd_tte_design& design, const cd_quadrature& quad) {
    cd_tte_law* raw = nullptr;
    check(cd_tte_law_calibrate(&design, &quad, &raw));
    return LawHandle(raw);
}

}  // namespace compdesign::frontend
