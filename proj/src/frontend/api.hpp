// Copyright 2026 The compdesign Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <memory>
#include <stdexcept>
#include <string>

#include "compdesign/compdesign.h"

namespace compdesign::frontend {

// A failed C API call, or a request rejected before reaching the library.
class ApiError : public std::runtime_error {
public:
    ApiError(cd_status status, std::string field, const std::string& message)
        : std::runtime_error(message), status_(status), field_(std::move(field)) {}

    cd_status status() const noexcept { return status_; }
    const std::string& field() const noexcept { return field_; }
    bool is_infeasibility() const noexcept { return cd_status_is_infeasibility(status_) != 0; }
    const char* code() const noexcept { return cd_status_name(status_); }

private:
    cd_status status_;
    std::string field_;
};

// Throws ApiError carrying the thread's last error when `status` is not CD_OK.
void check(cd_status status);

struct LawDeleter {
    void operator()(cd_tte_law* law) const noexcept { cd_tte_law_free(law); }
};
struct DatasetDeleter {
    void operator()(cd_dataset* data) const noexcept { cd_dataset_free(data); }
};

using LawHandle = std::unique_ptr<cd_tte_law, LawDeleter>;
using DatasetHandle = std::unique_ptr<cd_dataset, DatasetDeleter>;

LawHandle calibrate(const cd_tte_design& design, const cd_quadrature& quad);

}  // namespace compdesign::frontend
