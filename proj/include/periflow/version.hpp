#ifndef PERIFLOW_VERSION_HPP
#define PERIFLOW_VERSION_HPP

#define PERIFLOW_VERSION "0.1.0"

#endif
