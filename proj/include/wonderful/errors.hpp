#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace wonderful {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An enumeration was asked for a size above its configured cap.
class CapExceeded : public Error {
public:
    CapExceeded(const std::string& what, std::size_t requested, std::size_t cap)
        : Error(what + ": requested " + std::to_string(requested) + " exceeds cap " +
                std::to_string(cap)),
          requested_(requested), cap_(cap) {}

    std::size_t requested() const { return requested_; }
    std::size_t cap() const { return cap_; }

private:
    std::size_t requested_;
    std::size_t cap_;
};

// A division that must be exact left a remainder. Always an arithmetic bug.
class InexactDivision : public Error {
public:
    using Error::Error;
};

// Two independent computation routes disagreed.
class CrossCheckFailure : public Error {
public:
    using Error::Error;
};

// Arrangement input failed validation; offending() lists the stratum ids involved.
class ArrangementError : public Error {
public:
    ArrangementError(const std::string& what, std::vector<std::string> ids)
        : Error(format(what, ids)), ids_(std::move(ids)) {}

    const std::vector<std::string>& offending() const { return ids_; }

private:
    static std::string format(const std::string& what, const std::vector<std::string>& ids) {
        std::string s = what;
        if (!ids.empty()) {
            s += " [";
            for (std::size_t i = 0; i < ids.size(); ++i) {
                if (i) s += ", ";
                s += ids[i];
            }
            s += "]";
        }
        return s;
    }

    std::vector<std::string> ids_;
};

}  // namespace wonderful
