#pragma once

#include "odograph/error.hpp"
#include "odograph/io.hpp"
#include "odograph/kgraph.hpp"

#include <initializer_list>
#include <string>

namespace testing {

inline odograph::Word W(const odograph::SpecPtr& spec, const std::string& text) {
  return odograph::parse_word(spec, text);
}

inline odograph::Degree D(std::initializer_list<unsigned long> parts) {
  return odograph::Degree(std::vector<unsigned long>(parts));
}

// Letter sequence of the normal form, printed.
inline std::string nf(const odograph::Word& w) { return odograph::format_word(odograph::normal_form(w)); }

}  // namespace testing

namespace testing {

template <typename F>
std::string error_kind(F&& f) {
  try {
    f();
  } catch (const odograph::Error& e) {
    return odograph::to_string(e.kind());
  }
  return "none";
}

}  // namespace testing
