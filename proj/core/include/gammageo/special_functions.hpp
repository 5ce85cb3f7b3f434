// Copyright 2026 The gammageo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GAMMAGEO_SPECIAL_FUNCTIONS_HPP_
#define GAMMAGEO_SPECIAL_FUNCTIONS_HPP_

namespace gammageo {

// Log-gamma and the polygamma functions of order 0, 1 and 2 for positive
// real arguments. All four shift the argument upward with the recurrence
// until x >= 10 and then sum the Bernoulli asymptotic series.
//
// Every function throws DomainError for x <= 0 or non-finite x.

double log_gamma(double x);

// psi(x) = Gamma'(x) / Gamma(x).
double digamma(double x);

// psi'(x); positive and strictly decreasing on (0, inf).
double trigamma(double x);

// psi''(x); negative and strictly increasing on (0, inf).
double tetragamma(double x);

// Dispatches on order in {0, 1, 2}.
double polygamma(int order, double x);

}  // namespace gammageo

#endif  // GAMMAGEO_SPECIAL_FUNCTIONS_HPP_
