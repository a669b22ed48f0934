#pragma once

#include <doctest.h>

#include "measalg/errors.hpp"

/// Kind of the measalg::Error thrown by fn; fails the test if none is thrown.
template <typename Fn>
measalg::ErrorKind kind_of(Fn&& fn) {
  try {
    fn();
  } catch (const measalg::Error& e) {
    return e.kind();
  }
  FAIL("expected a measalg::Error");
  return measalg::ErrorKind::IoError;
}
