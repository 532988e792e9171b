#pragma once

#include <doctest.h>

#include "lenstight/error.hpp"

// Code of the lenstight::Error thrown by fn; fails the test when nothing is thrown.
template <typename Fn>
lenstight::ErrorCode code_of(Fn&& fn) {
  try {
    fn();
  } catch (const lenstight::Error& e) {
    return e.code();
  }
  FAIL("expected a lenstight::Error");
  return lenstight::ErrorCode::Unsupported;
}
