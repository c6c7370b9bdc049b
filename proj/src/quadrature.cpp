#include "ewv/quadrature.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_integration.h>

#include <memory>
#include <mutex>

namespace ewv {

namespace {

constexpr std::size_t kLimit = 4000;

void disable_gsl_abort() {
    static std::once_flag flag;
    std::call_once(flag, [] { gsl_set_error_handler_off(); });
}

double call_thunk(double x, void* params) {
    const auto& f = *static_cast<const std::function<double(double)>*>(params);
    return f(x);
}

struct WorkspaceDeleter {
    void operator()(gsl_integration_workspace* w) const { gsl_integration_workspace_free(w); }
};
using Workspace = std::unique_ptr<gsl_integration_workspace, WorkspaceDeleter>;

Workspace make_workspace() {
    Workspace w(gsl_integration_workspace_alloc(kLimit));
    if (!w) throw QuadratureError("integration workspace allocation failed");
    return w;
}

[[noreturn]] void fail(const char* what, int status) {
    throw QuadratureError(std::string(what) + ": " + gsl_strerror(status));
}

}  // namespace

QuadResult integrate(const std::function<double(double)>& f, double a, double b, double abs_tol,
                     double rel_tol) {
    disable_gsl_abort();
    Workspace ws = make_workspace();
    gsl_function F{&call_thunk, const_cast<std::function<double(double)>*>(&f)};
    QuadResult r;
    const int status = gsl_integration_qag(&F, a, b, abs_tol, rel_tol, kLimit,
                                           GSL_INTEG_GAUSS61, ws.get(), &r.value, &r.abs_err);
    if (status != 0) fail("adaptive quadrature failed", status);
    return r;
}

QuadResult integrate_singular(const std::function<double(double)>& f, double a, double b,
                              double abs_tol, double rel_tol) {
    disable_gsl_abort();
    Workspace ws = make_workspace();
    gsl_function F{&call_thunk, const_cast<std::function<double(double)>*>(&f)};
    QuadResult r;
    const int status =
        gsl_integration_qags(&F, a, b, abs_tol, rel_tol, kLimit, ws.get(), &r.value, &r.abs_err);
    if (status != 0) fail("singular-endpoint quadrature failed", status);
    return r;
}

QuadResult integrate_sin_tail(const std::function<double(double)>& f, double a, double omega,
                              double abs_tol) {
    disable_gsl_abort();
    Workspace ws = make_workspace();
    Workspace cycles = make_workspace();
    gsl_integration_qawo_table* table =
        gsl_integration_qawo_table_alloc(omega, 1.0, GSL_INTEG_SINE, 48);
    if (!table) throw QuadratureError("oscillatory table allocation failed");
    gsl_function F{&call_thunk, const_cast<std::function<double(double)>*>(&f)};
    QuadResult r;
    const int status =
        gsl_integration_qawf(&F, a, abs_tol, kLimit, ws.get(), cycles.get(), table, &r.value,
                             &r.abs_err);
    gsl_integration_qawo_table_free(table);
    if (status != 0) fail("oscillatory tail quadrature failed", status);
    return r;
}

}  // namespace ewv
