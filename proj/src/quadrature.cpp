#include "bsq/quadrature.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_integration.h>

namespace bsq {

namespace {

double call_std_function(double x, void* params) {
    auto* f = static_cast<std::function<double(double)>*>(params);
    return (*f)(x);
}

}  // namespace

QuadResult integrate_adaptive(const std::function<double(double)>& f, double a,
                              double b, double abs_tol, double rel_tol) {
    gsl_integration_workspace* ws = gsl_integration_workspace_alloc(1024);
    gsl_function gf;
    gf.function = &call_std_function;
    gf.params = const_cast<std::function<double(double)>*>(&f);
    QuadResult res;
    gsl_error_handler_t* old = gsl_set_error_handler_off();
    int status = gsl_integration_qag(&gf, a, b, abs_tol, rel_tol, 1024,
                                     GSL_INTEG_GAUSS15, ws, &res.value, &res.abserr);
    gsl_set_error_handler(old);
    gsl_integration_workspace_free(ws);
    res.converged = (status == GSL_SUCCESS);
    return res;
}

}  // namespace bsq
