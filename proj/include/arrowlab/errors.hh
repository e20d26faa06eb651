#ifndef ARROWLAB_GUARD_ARROWLAB_ERRORS_HH
#define ARROWLAB_GUARD_ARROWLAB_ERRORS_HH 1

#include <stdexcept>
#include <string>

namespace arrowlab
{
    class Error : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    /// Bad parameters or a structurally invalid graph (loops, digons, bad root).
    class InvalidInput : public Error
    {
    public:
        using Error::Error;
    };

    /// Text that does not parse as a graph file.
    class MalformedInput : public Error
    {
    public:
        using Error::Error;
    };

    /// A quantity that is mathematically undefined for the given input.
    class UndefinedInput : public Error
    {
    public:
        using Error::Error;
    };

    /// Input exceeds a fixed size bound of an exact routine.
    class TooLarge : public Error
    {
    public:
        using Error::Error;
    };

    /// A node or time budget ran out. Exact routines never return a guess instead.
    class ResourceLimit : public Error
    {
    public:
        using Error::Error;
    };

    /// A caller-supplied precondition (e.g. an S-free core orientation) does not hold.
    class PreconditionViolated : public Error
    {
    public:
        using Error::Error;
    };
}

#endif
