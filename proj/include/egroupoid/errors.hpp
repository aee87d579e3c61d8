#ifndef EGROUPOID_ERRORS_HPP_
#define EGROUPOID_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace egroupoid {

  //! Thrown when an operation is called with arguments that violate its
  //! preconditions (carrier mismatch, non-idempotent where one is needed, ...).
  class usage_error : public std::logic_error {
   public:
    using std::logic_error::logic_error;
  };

  //! Thrown when malformed input is supplied (JSON, element names, codes).
  class input_error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  //! Thrown when an enumeration exceeds its cap.
  class resource_error : public std::runtime_error {
   public:
    resource_error(std::string const& what, std::size_t partial_size)
        : std::runtime_error(what), _partial_size(partial_size) {}

    std::size_t partial_size() const noexcept {
      return _partial_size;
    }

   private:
    std::size_t _partial_size;
  };

}  // namespace egroupoid

#endif  // EGROUPOID_ERRORS_HPP_
