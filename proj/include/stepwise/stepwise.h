/* C interface to the stepwise evaluators and generic servers.
 *
 * All functions report failure through sw_status. After a non-OK status,
 * sw_last_error() describes the failure; the message is thread-local and
 * stays valid until the next call on the same thread.
 *
 * Strings returned through `char** out` are owned by the caller and must be
 * released with sw_string_free. */
#ifndef STEPWISE_STEPWISE_H
#define STEPWISE_STEPWISE_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(STEPWISE_BUILDING)
#    define SW_API __declspec(dllexport)
#  else
#    define SW_API __declspec(dllimport)
#  endif
#else
#  define SW_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sw_status {
  SW_OK = 0,
  SW_ERR_INVALID_ARGUMENT = 1, /* null pointer, unknown mode or kind */
  SW_ERR_PARSE = 2,            /* malformed expression */
  SW_ERR_DIVIDE_BY_ZERO = 3,   /* zero divisor in a mode without exceptions */
  SW_ERR_UNKNOWN_CALLBACK = 4,
  SW_ERR_SCENARIO_FORMAT = 5,  /* malformed scenario line */
  SW_ERR_SERVER_CRASHED = 6,   /* a basic server died of a failing request */
  SW_ERR_INTERNAL = 7
} sw_status;

typedef struct sw_server sw_server;

/* Receives each log line (without newline) as the server appends it. */
typedef void (*sw_log_fn)(const char* line, void* user_data);

SW_API const char* sw_last_error(void);
SW_API const char* sw_status_name(sw_status status);
SW_API void sw_string_free(char* s);

/* Position (1-based) of the last SW_ERR_PARSE on this thread, 0 if none. */
SW_API size_t sw_last_parse_position(void);

/* mode: "simple", "monadic", "exceptions", "state" or "output".
 * On success *out holds the rendered result followed by one newline. */
SW_API sw_status sw_eval(const char* mode, const char* src, char** out);

/* kind: "basic", "transaction" or "hotswap". `log` may be NULL. The
 * "starting ..." line is delivered before this returns. */
SW_API sw_status sw_server_start(const char* kind, const char* callback_name, sw_log_fn log,
                                 void* user_data, sw_server** out);

/* Feeds one scenario line ("op :: a | b"); blank and '#' lines are skipped
 * but still counted. SW_ERR_SCENARIO_FORMAT messages carry the line number.
 * Once a basic server crashes every further call answers
 * SW_ERR_SERVER_CRASHED. */
SW_API sw_status sw_server_feed_line(sw_server* server, const char* line);

/* Logs "done". SW_ERR_SERVER_CRASHED if the server had crashed. */
SW_API sw_status sw_server_finish(sw_server* server);

SW_API size_t sw_server_log_size(const sw_server* server);
/* NULL when out of range. Valid until the server is next modified. */
SW_API const char* sw_server_log_line(const sw_server* server, size_t index);

/* Text form of the current callback state, e.g. "{EiffelTower: Paris}" or "7". */
SW_API sw_status sw_server_state(const sw_server* server, char** out);

/* Name of the currently installed callback. */
SW_API const char* sw_server_callback_name(const sw_server* server);

SW_API void sw_server_destroy(sw_server* server);

#ifdef __cplusplus
}
#endif

#endif /* STEPWISE_STEPWISE_H */
