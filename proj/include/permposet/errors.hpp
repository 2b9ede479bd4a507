#pragma once

#include <stdexcept>
#include <string>

namespace permposet {

// Base class for all domain errors raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// perm_core
class NotABijection : public Error { public: using Error::Error; };
class NotSingleInverseDescent : public Error { public: using Error::Error; };
class InvalidWord : public Error { public: using Error::Error; };
class EmptySet : public Error { public: using Error::Error; };
class OutOfRange : public Error { public: using Error::Error; };
class ParseError : public Error { public: using Error::Error; };

// caps (perm_core / poset)
class SizeCapExceeded : public Error { public: using Error::Error; };

// mobius
class IdesMismatch : public Error { public: using Error::Error; };
class DesMismatch : public Error { public: using Error::Error; };
class FNotNormalized : public Error { public: using Error::Error; };
class ExcludedInput : public Error { public: using Error::Error; };
class Contains321 : public Error { public: using Error::Error; };
class NotInInterval : public Error { public: using Error::Error; };

// families / cli
class BadParam : public Error { public: using Error::Error; };

}  // namespace permposet
