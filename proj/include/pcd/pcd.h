#ifndef PCD_PCD_H
#define PCD_PCD_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(PCD_BUILDING_LIBRARY)
#    define PCD_API __declspec(dllexport)
#  else
#    define PCD_API __declspec(dllimport)
#  endif
#else
#  define PCD_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pcd_status {
  PCD_OK = 0,
  PCD_ERR_INVALID = 1,
  PCD_ERR_DEGENERATE = 2,
  PCD_ERR_OUTSIDE = 3,
  PCD_ERR_TOO_LARGE = 4,
  PCD_ERR_IO = 5,
  PCD_ERR_INTERNAL = 6
} pcd_status;

typedef struct pcd_point {
  double x;
  double y;
} pcd_point;

typedef struct pcd_triangle {
  pcd_point v[3];
} pcd_triangle;

typedef enum pcd_center_kind {
  PCD_CENTER_CENTROID = 0,
  PCD_CENTER_CIRCUMCENTER = 1,
  PCD_CENTER_INCENTER = 2,
  PCD_CENTER_CUSTOM = 3
} pcd_center_kind;

typedef struct pcd_center {
  pcd_center_kind kind;
  pcd_point custom;
} pcd_center;

typedef enum pcd_region_kind { PCD_REGION_EMPTY = 0, PCD_REGION_POINT = 1, PCD_REGION_POLYGON = 2 } pcd_region_kind;

typedef struct pcd_map pcd_map;
typedef struct pcd_digraph pcd_digraph;
typedef struct pcd_gamma1 pcd_gamma1;

/* Message of the last failing call on this thread; never NULL. */
PCD_API const char* pcd_last_error(void);
/* Frees strings returned through char** out-parameters. */
PCD_API void pcd_string_free(char* s);

PCD_API pcd_status pcd_basic_triangle(double c1, double c2, pcd_triangle* out);
PCD_API void pcd_equilateral_triangle(pcd_triangle* out);
/* Rejects collinear or non-finite vertices. */
PCD_API pcd_status pcd_triangle_check(const pcd_triangle* t);
PCD_API pcd_status pcd_triangle_contains(const pcd_triangle* t, pcd_point p, int* out);
PCD_API pcd_status pcd_triangle_area(const pcd_triangle* t, double* out);

/* center may be NULL for the centroid. r = INFINITY selects the map whose
   regions are the whole triangle. */
PCD_API pcd_status pcd_map_pe(const pcd_triangle* t, double r, const pcd_center* center, pcd_map** out);
PCD_API pcd_status pcd_map_cs(const pcd_triangle* t, double tau, const pcd_center* center, pcd_map** out);
PCD_API pcd_status pcd_map_spherical(const pcd_triangle* t, pcd_map** out);
PCD_API pcd_status pcd_map_arcslice(const pcd_triangle* t, pcd_map** out);
PCD_API pcd_status pcd_map_interval(const double* ys, size_t n, pcd_map** out);
PCD_API void pcd_map_free(pcd_map* m);

/* *out = 1 when y lies in the region of x. */
PCD_API pcd_status pcd_map_contains(const pcd_map* m, pcd_point x, pcd_point y, int* out);
/* Triangle after counter-clockwise normalization. */
PCD_API pcd_status pcd_map_triangle(const pcd_map* m, pcd_triangle* out);
PCD_API pcd_status pcd_map_center(const pcd_map* m, pcd_point* out);
/* Bound on the domination number: value > 0, -1 when unbounded in n, 0 unknown. */
PCD_API int pcd_map_kappa(const pcd_map* m);

PCD_API pcd_status pcd_digraph_build(const pcd_map* m, const pcd_point* pts, size_t n, pcd_digraph** out);
PCD_API void pcd_digraph_free(pcd_digraph* d);
PCD_API size_t pcd_digraph_order(const pcd_digraph* d);
/* Same convention as pcd_map_kappa, from the family the digraph was built with. */
PCD_API int pcd_digraph_kappa(const pcd_digraph* d);
PCD_API size_t pcd_digraph_arc_count(const pcd_digraph* d);
/* Writes arc k as pairs[2k], pairs[2k+1]; cap counts arcs. */
PCD_API pcd_status pcd_digraph_arcs(const pcd_digraph* d, size_t* pairs, size_t cap);
/* kmax = 0: no cap. witness may be NULL. *exact = 0 when the cap stopped the search. */
PCD_API pcd_status pcd_digraph_domination(const pcd_digraph* d, size_t kmax, size_t* gamma, size_t* witness,
                                          size_t witness_cap, size_t* witness_len, int* exact);
PCD_API pcd_status pcd_digraph_density(const pcd_digraph* d, double* out);
/* m may be NULL; has_seed = 0 writes a null seed. */
PCD_API pcd_status pcd_digraph_to_json(const pcd_digraph* d, const pcd_map* m, uint64_t seed, int has_seed,
                                       char** out);
PCD_API pcd_status pcd_digraph_from_json(const char* text, pcd_digraph** out);

PCD_API pcd_status pcd_gamma1_compute(const pcd_map* m, const pcd_point* pts, size_t n, pcd_gamma1** out);
PCD_API void pcd_gamma1_free(pcd_gamma1* g);
PCD_API pcd_region_kind pcd_gamma1_kind(const pcd_gamma1* g);
PCD_API double pcd_gamma1_area(const pcd_gamma1* g);
/* Vertex count of the piece in cell i (0..2). */
PCD_API size_t pcd_gamma1_piece_size(const pcd_gamma1* g, int cell);
PCD_API pcd_status pcd_gamma1_piece(const pcd_gamma1* g, int cell, pcd_point* out, size_t cap);
PCD_API pcd_status pcd_gamma1_point(const pcd_gamma1* g, pcd_point* out);
/* Vertex count of the convex hull of the region. */
PCD_API size_t pcd_gamma1_hull_size(const pcd_gamma1* g);

/* g may be NULL. */
PCD_API pcd_status pcd_svg_render(const pcd_map* m, const pcd_point* pts, size_t n, const pcd_gamma1* g,
                                  char** out);

/* Draws from the stream of (seed, n, 0). */
PCD_API pcd_status pcd_sample_uniform(const pcd_triangle* t, size_t n, uint64_t seed, pcd_point* out);

/* Points realizing domination number n for the CS map m. eps < 0 picks the
   default perturbation, eps = 0 none. */
PCD_API pcd_status pcd_cs_construction(const pcd_map* m, size_t n, double eps, uint64_t seed, pcd_point* out);
/* Default perturbation radius relative to the edge v1-v2 of the map triangle. */
PCD_API pcd_status pcd_cs_construction_default_eps(const pcd_map* m, size_t n, double* out);

/* CSV with header. Estimator names: edge-distance, gamma1-area,
   domination-pmf, eta-pmf, arc-density, gamma1-prob, interval-1d (m may be
   NULL for the last one). rate, when non-NULL, receives the log-log slope of
   the main statistic or NAN when it cannot be fitted. */
PCD_API pcd_status pcd_simulate_csv(const char* estimator, const pcd_map* m, const size_t* n_grid, size_t n_count,
                                    size_t replicates, uint64_t seed, unsigned threads, char** csv, double* rate);

PCD_API pcd_status pcd_fit_rate(const double* n, const double* mean, size_t count, double* slope);

#ifdef __cplusplus
}
#endif

#endif
